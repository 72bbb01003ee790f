"""On the projective plane every loop is trivial or THE loop.

Run:  python3 demos/projective_parity.py
"""

from pathrw import builtin, encode, normalize, parse_path
from pathrw.oracle import enumerate_loops
from pathrw.pi1 import render_group_value
from pathrw.syntax import render_path, render_word


def section(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def main() -> None:
    rp2 = builtin("rp2")

    section("One loop that squares away")
    print("A single generator α with the relation α * α = refl: going around")
    print("twice is the same as standing still, so only parity survives.")

    section("Only two normal forms exist")
    for text in ("α", "α * α", "α * α * α", "~α", "α * ~α"):
        w = normalize(rp2, parse_path(rp2, text))
        print(f"  {text:12s} ->  {render_word(rp2, w.word)}")

    section("Exhausting every short loop word")
    tallies = {"refl": 0, "α": 0}
    for loop in enumerate_loops(rp2, 10):
        w = normalize(rp2, loop)
        tallies[render_word(rp2, w.word)] += 1
    total = sum(tallies.values())
    print(f"  {total} loop words of length up to 10:")
    for form, count in tallies.items():
        print(f"    {count:3d} normalize to {form}")
    assert set(tallies) == {"refl", "α"}

    section("Parity arithmetic")
    for text in ("α", "α * α", "~α * ~α * ~α"):
        v = encode(rp2, parse_path(rp2, text))
        print(f"  {text:14s} has parity {render_group_value(v)}")
    assert encode(rp2, parse_path(rp2, "α * α")).m == 0

    section("The inverse loop is the loop itself")
    same = normalize(rp2, parse_path(rp2, "~α")) == normalize(rp2, parse_path(rp2, "α"))
    print(f"  ~α normalizes to α?  {same}")
    assert same

    print()
    print("Loops on the projective plane form the two-element group.")


if __name__ == "__main__":
    main()
