"""Loops on the circle and the integer that classifies them.

Run:  python3 demos/winding_numbers.py
"""

from pathrw import Lcg, builtin, class_of, decode, encode, normalize, parse_path
from pathrw.pi1 import GroupValue, render_group_value
from pathrw.oracle import random_term
from pathrw.terms import size


def section(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def main() -> None:
    circle = builtin("circle")
    base = circle.basepoint

    section("One generator, one point")
    print("The circle presentation has a single point and a single loop a.")
    print("Any path expression built from a, inverses, and composition is a loop.")

    section("Normal forms collapse the noise")
    for text in ("a * ~a", "a * a * ~a * a", "~a * a * a", "refl * a"):
        nf = normalize(circle, parse_path(circle, text))
        letters = "".join(f"{n}{'+' if s > 0 else '-'}" for n, s in nf.word.letters)
        print(f"  {text:18s} ->  [{letters or 'empty'}]")

    section("The winding count is a complete invariant")
    for text in ("a * a * a", "~a * ~a", "a * ~a", "a * a * ~a"):
        v = encode(circle, parse_path(circle, text))
        print(f"  {text:12s} winds {render_group_value(v):>3s} times")

    section("Counting is reversible")
    for n in (-3, 0, 5):
        cls = decode(circle, GroupValue(circle.group_tag, n))
        back = encode(circle, cls.representative())
        print(f"  {n:3d} -> canonical loop -> {render_group_value(back):>3s}")
        assert back.m == n

    section("Round trips hold on random loops")
    rng = Lcg(2)
    for _ in range(5):
        x = random_term(circle, 1 + rng.randint(18), rng, base, base)
        v = encode(circle, x)
        same = decode(circle, v) == class_of(circle, x)
        print(f"  random loop of size {size(x):2d}: winds {v.m:3d}, decode matches: {same}")
        assert same

    print()
    print("Loops on the circle are exactly the integers under addition.")


if __name__ == "__main__":
    main()
