"""Loop classes at the basepoint as elements of a concrete group.

Each builtin space carries a group tag naming the shape of its basepoint
loop group; this module converts between normal forms and tagged group
elements, and provides the group arithmetic itself so the translation can
be checked to be a homomorphism.

The two spaces whose basepoint sits on a circle factor (cylinder, mobius
band) encode through an explicit retraction onto the circle rather than by
counting letters, keeping the computation honest to why the answer is an
integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    GroupTagMismatchError,
    NotABasepointLoopError,
    ParseError,
)
from .groupoid import PathClass, class_of
from .rewrite import normalize, term_of_word
from .spaces import GroupTag, SpacePresentation, builtin
from .terms import Gen, PathExpr, Refl, SpaceMap, Trans, endpoints, map_path, zpow


@dataclass(frozen=True)
class GroupValue:
    """An element of a tagged group. FreeZ and Z2 use `m` alone; the
    two-generator tags use the pair (m, n), first generator's exponent
    first."""

    tag: GroupTag
    m: int = 0
    n: int = 0

    def __post_init__(self) -> None:
        if self.tag in (GroupTag.FREE_Z, GroupTag.Z2) and self.n != 0:
            raise ValueError(f"{self.tag.value} values have a single component")
        if self.tag is GroupTag.Z2 and self.m not in (0, 1):
            raise ValueError("Z2 values are 0 or 1")


@lru_cache(maxsize=None)
def cylinder_to_circle() -> SpaceMap:
    """Retraction collapsing the cylinder onto its base circle."""
    return SpaceMap(
        source=builtin("cylinder"),
        target=builtin("circle"),
        point_map={"b0": "pt", "b1": "pt"},
        gen_map={"s": Refl("pt"), "l0": Gen("a"), "l1": Gen("a")},
    )


@lru_cache(maxsize=None)
def mobius_to_circle() -> SpaceMap:
    """Deformation of the band onto its core circle."""
    return SpaceMap(
        source=builtin("mobius"),
        target=builtin("circle"),
        point_map={"pt": "pt"},
        gen_map={"a": Gen("a")},
    )


def _require_basepoint_loop(space: SpacePresentation, p: PathExpr) -> None:
    src, tgt = endpoints(space, p)
    if src != space.basepoint or tgt != space.basepoint:
        raise NotABasepointLoopError(
            f"encode needs a loop at '{space.basepoint}', got {src} -> {tgt}"
        )


def _circle_winding(p: PathExpr) -> int:
    word = normalize(builtin("circle"), p).word
    return sum(sign for _, sign in word.letters)


def encode(space: SpacePresentation, p: PathExpr) -> GroupValue:
    """The group element of a basepoint loop."""
    tag = space.group_tag
    if tag is None:
        raise GroupTagMismatchError(
            f"space '{space.name}' carries no group tag; encode is undefined"
        )
    _require_basepoint_loop(space, p)
    if space.name == "cylinder":
        return GroupValue(tag, _circle_winding(map_path(cylinder_to_circle(), p)))
    if space.name == "mobius":
        return GroupValue(tag, _circle_winding(map_path(mobius_to_circle(), p)))
    word = normalize(space, p).word
    if tag is GroupTag.FREE_Z:
        return GroupValue(tag, sum(sign for _, sign in word.letters))
    if tag is GroupTag.ZXZ:
        a = space.generators[0].name
        m = sum(sign for name, sign in word.letters if name == a)
        n = sum(sign for name, sign in word.letters if name != a)
        return GroupValue(tag, m, n)
    if tag is GroupTag.Z_SEMIDIRECT_Z:
        a = space.generators[0].name
        m = 0
        n = 0
        for name, sign in word.letters:
            if name == a:
                m += sign
                n = -n
            else:
                n += sign
        return GroupValue(tag, m, n)
    if tag is GroupTag.Z2:
        return GroupValue(tag, len(word.letters) % 2)
    raise AssertionError(f"unhandled group tag {tag!r}")


def encode_class(c: PathClass) -> GroupValue:
    return encode(c.space, term_of_word(c.nf.word))


def decode(space: SpacePresentation, value: GroupValue) -> PathClass:
    """The loop class a group element names. Inverse to encode on classes."""
    tag = space.group_tag
    if tag is None:
        raise GroupTagMismatchError(
            f"space '{space.name}' carries no group tag; decode is undefined"
        )
    if value.tag is not tag:
        raise GroupTagMismatchError(
            f"value tagged {value.tag.value} does not fit space '{space.name}' "
            f"(expected {tag.value})"
        )
    base = space.basepoint
    if tag is GroupTag.FREE_Z:
        loop = space.generators[0].name
        if space.name == "cylinder":
            loop = space.generators[1].name
        return class_of(space, zpow(space, Gen(loop), value.m))
    if tag in (GroupTag.ZXZ, GroupTag.Z_SEMIDIRECT_Z):
        a = Gen(space.generators[0].name)
        b = Gen(space.generators[1].name)
        term = Trans(zpow(space, a, value.m), zpow(space, b, value.n))
        return class_of(space, term)
    if tag is GroupTag.Z2:
        if value.m % 2:
            return class_of(space, Gen(space.generators[0].name))
        return class_of(space, Refl(base))
    raise AssertionError(f"unhandled group tag {tag!r}")


def _require_same_tag(v1: GroupValue, v2: GroupValue) -> None:
    if v1.tag is not v2.tag:
        raise GroupTagMismatchError(
            f"cannot combine {v1.tag.value} with {v2.tag.value}"
        )


def group_identity(tag: GroupTag) -> GroupValue:
    return GroupValue(tag)


def group_mul(v1: GroupValue, v2: GroupValue) -> GroupValue:
    _require_same_tag(v1, v2)
    tag = v1.tag
    if tag is GroupTag.FREE_Z:
        return GroupValue(tag, v1.m + v2.m)
    if tag is GroupTag.ZXZ:
        return GroupValue(tag, v1.m + v2.m, v1.n + v2.n)
    if tag is GroupTag.Z_SEMIDIRECT_Z:
        # Appending v2 first twists v1's second coordinate once per unit of
        # v2's first coordinate.
        flip = -1 if v2.m % 2 else 1
        return GroupValue(tag, v1.m + v2.m, flip * v1.n + v2.n)
    if tag is GroupTag.Z2:
        return GroupValue(tag, (v1.m + v2.m) % 2)
    raise AssertionError(f"unhandled group tag {tag!r}")


def group_inv(v: GroupValue) -> GroupValue:
    tag = v.tag
    if tag is GroupTag.FREE_Z:
        return GroupValue(tag, -v.m)
    if tag is GroupTag.ZXZ:
        return GroupValue(tag, -v.m, -v.n)
    if tag is GroupTag.Z_SEMIDIRECT_Z:
        flip = -1 if v.m % 2 else 1
        return GroupValue(tag, -v.m, -flip * v.n)
    if tag is GroupTag.Z2:
        return GroupValue(tag, v.m % 2)
    raise AssertionError(f"unhandled group tag {tag!r}")


def homomorphism_check(
    space: SpacePresentation, p: PathExpr, q: PathExpr
) -> bool:
    """encode sends composition to group multiplication on these loops."""
    lhs = encode(space, Trans(p, q))
    rhs = group_mul(encode(space, p), encode(space, q))
    return lhs == rhs


def render_group_value(value: GroupValue) -> str:
    if value.tag in (GroupTag.ZXZ, GroupTag.Z_SEMIDIRECT_Z):
        return f"({value.m}, {value.n})"
    return str(value.m)


def parse_group_value(tag: GroupTag, text: str) -> GroupValue:
    """Parse a group element in the shape render_group_value emits."""
    stripped = text.strip()
    if tag in (GroupTag.ZXZ, GroupTag.Z_SEMIDIRECT_Z):
        if not (stripped.startswith("(") and stripped.endswith(")")):
            raise ParseError(
                f"{tag.value} values look like (m, n); got {text!r}"
            )
        parts = stripped[1:-1].split(",")
        if len(parts) != 2:
            raise ParseError(
                f"{tag.value} values look like (m, n); got {text!r}"
            )
        try:
            return GroupValue(tag, int(parts[0].strip()), int(parts[1].strip()))
        except ValueError:
            raise ParseError(f"bad integer in {text!r}") from None
    try:
        m = int(stripped)
    except ValueError:
        raise ParseError(f"{tag.value} values are integers; got {text!r}") from None
    if tag is GroupTag.Z2 and m not in (0, 1):
        raise ParseError(f"Z2 values are 0 or 1; got {text!r}")
    return GroupValue(tag, m)
