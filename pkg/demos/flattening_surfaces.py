"""The cylinder and the Möbius band both flatten onto the circle.

Run:  python3 demos/flattening_surfaces.py
"""

from pathrw import builtin, decode, encode, normalize, parse_path
from pathrw.pi1 import GroupValue, render_group_value
from pathrw.syntax import render_path, render_word


def section(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def main() -> None:
    cyl = builtin("cylinder")
    mobius = builtin("mobius")

    section("A cylinder has two boundary circles")
    print("Points b0, b1; a crossing path s; boundary loops l0 and l1.")
    print("Its one relation says the square commutes: s * l1 = l0 * s.")

    section("The far loop is a conjugate of the near one")
    for text in ("l1", "~l1", "s * l1 * ~s"):
        w = normalize(cyl, parse_path(cyl, text))
        print(f"  {text:12s} ->  {render_word(cyl, w.word)}")
    assert normalize(cyl, parse_path(cyl, "s * l1 * ~s")) == normalize(
        cyl, parse_path(cyl, "l0")
    )
    print("So carrying l1 across the cylinder gives exactly l0.")

    section("Both boundary loops wind once")
    for text in ("l0", "s * l1 * ~s", "l0 * l0 * ~l0"):
        v = encode(cyl, parse_path(cyl, text))
        print(f"  {text:14s} winds {render_group_value(v)}")

    section("The Möbius band tells the same story with a half twist")
    print("One point, one loop a; no relation is needed because the band")
    print("deformation retracts to its core circle.")
    for n in (-2, 1, 3):
        cls = decode(mobius, GroupValue(mobius.group_tag, n))
        print(f"  {n:2d}  ->  {render_path(mobius, cls.representative())}")
        assert encode(mobius, cls.representative()).m == n

    print()
    print("Loop counting on either surface is loop counting on the circle.")


if __name__ == "__main__":
    main()
