"""Walks on the torus commute, so two counters classify them.

Run:  python3 demos/torus_walks.py
"""

from pathrw import builtin, class_of, decode, encode, normalize, parse_path
from pathrw.pi1 import GroupValue, group_mul, render_group_value
from pathrw.syntax import render_word


def section(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def main() -> None:
    torus = builtin("torus")

    section("Two loops, one exchange relation")
    print("Generators a and b at the single point; the relation a * b = b * a")
    print("lets every walk be sorted into a block of a's then a block of b's.")

    section("Sorting in action")
    for text in ("b * a", "b * a * b * ~a", "~b * a * b * b"):
        w = normalize(torus, parse_path(torus, text))
        print(f"  {text:16s} ->  {render_word(torus, w.word)}")

    section("A pair of counters survives the sorting")
    for text in ("a * b * a", "b * ~a * b", "a * b * ~a * ~b"):
        v = encode(torus, parse_path(torus, text))
        print(f"  {text:16s} ->  {render_group_value(v)}")
    assert encode(torus, parse_path(torus, "a * b * ~a * ~b")).m == 0

    section("Counters add componentwise")
    u = encode(torus, parse_path(torus, "a * a * b"))
    v = encode(torus, parse_path(torus, "~a * b"))
    w = group_mul(u, v)
    print(f"  {render_group_value(u)} + {render_group_value(v)} = {render_group_value(w)}")
    composed = encode(torus, parse_path(torus, "a * a * b * ~a * b"))
    assert composed == w

    section("And the counters decode back to canonical walks")
    for m, n in ((2, -1), (0, 3), (-1, -1)):
        cls = decode(torus, GroupValue(torus.group_tag, m, n))
        back = encode(torus, cls.representative())
        print(f"  ({m:2d},{n:2d}) -> walk -> {render_group_value(back)}")
        assert (back.m, back.n) == (m, n)

    x = parse_path(torus, "b * a * b")
    assert decode(torus, encode(torus, x)) == class_of(torus, x)

    print()
    print("Walks on the torus are pairs of integers under addition.")


if __name__ == "__main__":
    main()
