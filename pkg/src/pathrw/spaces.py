"""Finitely presented spaces: points, generator paths, relations.

Six builtin presentations ship with the library (circle, cylinder, mobius,
torus, klein, rp2). Each carries a group tag naming the fundamental group
its normalizer targets; presentations loaded from files carry no tag and
normalize by free reduction only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from . import terms
from .errors import ParseError, UnknownSpaceError
from .terms import Gen, PathExpr, Refl, Symm, Trans


class GroupTag(enum.Enum):
    """Which canonical-form strategy (and group arithmetic) a space uses."""

    FREE_Z = "FreeZ"
    ZXZ = "ZxZ"
    Z_SEMIDIRECT_Z = "ZSemidirectZ"
    Z2 = "Z2"


@dataclass(frozen=True)
class Generator:
    """A named generator path from src to tgt."""

    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Relation:
    """A named two-sided identification of path terms.

    Stored directed: rewriting lhs -> rhs is the direction the normalizer
    prefers, but the engine may apply either direction.
    """

    name: str
    lhs: PathExpr
    rhs: PathExpr


@dataclass(frozen=True)
class SpacePresentation:
    name: str
    points: tuple[str, ...]
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...]
    basepoint: str
    group_tag: GroupTag | None = None
    point_set: frozenset[str] = field(init=False, compare=False, repr=False)
    generator_map: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "point_set", frozenset(self.points))
        object.__setattr__(
            self, "generator_map", {g.name: g for g in self.generators}
        )


BUILTIN_NAMES = ("circle", "cylinder", "mobius", "torus", "klein", "rp2")


@lru_cache(maxsize=None)
def builtin(name: str) -> SpacePresentation:
    """One of the six builtin presentations, by name. Deterministic."""
    if name == "circle":
        return SpacePresentation(
            name="circle",
            points=("pt",),
            generators=(Generator("a", "pt", "pt"),),
            relations=(),
            basepoint="pt",
            group_tag=GroupTag.FREE_Z,
        )
    if name == "cylinder":
        return SpacePresentation(
            name="cylinder",
            points=("b0", "b1"),
            generators=(
                Generator("s", "b0", "b1"),
                Generator("l0", "b0", "b0"),
                Generator("l1", "b1", "b1"),
            ),
            relations=(
                Relation(
                    "cylSquare",
                    Trans(Gen("s"), Gen("l1")),
                    Trans(Gen("l0"), Gen("s")),
                ),
            ),
            basepoint="b0",
            group_tag=GroupTag.FREE_Z,
        )
    if name == "mobius":
        return SpacePresentation(
            name="mobius",
            points=("pt",),
            generators=(Generator("a", "pt", "pt"),),
            relations=(),
            basepoint="pt",
            group_tag=GroupTag.FREE_Z,
        )
    if name == "torus":
        return SpacePresentation(
            name="torus",
            points=("pt",),
            generators=(Generator("a", "pt", "pt"), Generator("b", "pt", "pt")),
            relations=(
                Relation(
                    "torusComm",
                    Trans(Gen("a"), Gen("b")),
                    Trans(Gen("b"), Gen("a")),
                ),
            ),
            basepoint="pt",
            group_tag=GroupTag.ZXZ,
        )
    if name == "klein":
        return SpacePresentation(
            name="klein",
            points=("pt",),
            generators=(Generator("a", "pt", "pt"), Generator("b", "pt", "pt")),
            relations=(
                Relation(
                    "kleinSurf",
                    Trans(Trans(Gen("a"), Gen("b")), Symm(Gen("a"))),
                    Symm(Gen("b")),
                ),
            ),
            basepoint="pt",
            group_tag=GroupTag.Z_SEMIDIRECT_Z,
        )
    if name == "rp2":
        return SpacePresentation(
            name="rp2",
            points=("pt",),
            generators=(Generator("alpha", "pt", "pt"),),
            relations=(
                Relation(
                    "loopSquare",
                    Trans(Gen("alpha"), Gen("alpha")),
                    Refl("pt"),
                ),
            ),
            basepoint="pt",
            group_tag=GroupTag.Z2,
        )
    raise UnknownSpaceError(
        f"no builtin space named '{name}' (choose from {', '.join(BUILTIN_NAMES)})"
    )


def validate(space: SpacePresentation) -> list[str]:
    """All well-formedness violations of a presentation; empty means valid."""
    out: list[str] = []
    seen_points: set[str] = set()
    for pt in space.points:
        if not pt:
            out.append("UnknownPoint: empty point name")
        elif pt in seen_points:
            out.append(f"DuplicateName: point '{pt}' declared twice")
        seen_points.add(pt)
    seen_names = set(seen_points)
    for g in space.generators:
        if g.name in seen_names:
            out.append(f"DuplicateName: '{g.name}' declared more than once")
        seen_names.add(g.name)
        if g.src not in space.point_set:
            out.append(
                f"UnknownPoint: generator '{g.name}' source '{g.src}' "
                "is not a declared point"
            )
        if g.tgt not in space.point_set:
            out.append(
                f"UnknownPoint: generator '{g.name}' target '{g.tgt}' "
                "is not a declared point"
            )
    if space.basepoint not in space.point_set:
        out.append(f"UnknownPoint: basepoint '{space.basepoint}' is not declared")
    rel_names: set[str] = set()
    for rel in space.relations:
        if rel.name in rel_names or rel.name in seen_names:
            out.append(f"DuplicateName: relation '{rel.name}' reuses a name")
        rel_names.add(rel.name)
        sides = []
        for label, side in (("lhs", rel.lhs), ("rhs", rel.rhs)):
            try:
                sides.append(terms.endpoints(space, side))
            except Exception as exc:
                out.append(f"{type(exc).__name__}: relation '{rel.name}' {label}: {exc}")
        if len(sides) == 2 and sides[0] != sides[1]:
            out.append(
                f"EndpointMismatch: relation '{rel.name}' sides run "
                f"{sides[0][0]} -> {sides[0][1]} and {sides[1][0]} -> {sides[1][1]}"
            )
    return out


def parse_space_text(text: str, name: str = "user-space") -> SpacePresentation:
    """Parse the plain-text space format.

    Lines: `point <name>`, `gen <name> : <src> -> <tgt>`,
    `rel <name> : <expr> = <expr>`, `base <name>`. `#` starts a comment.
    Relations may reference any generator declared anywhere in the file.
    """
    points: list[str] = []
    gens: list[Generator] = []
    rel_lines: list[tuple[int, str, str, str]] = []
    basepoint: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "point":
            if not rest or " " in rest:
                raise ParseError(f"line {lineno}: expected 'point <name>'")
            points.append(rest)
        elif head == "gen":
            gname, sep, arrow = rest.partition(":")
            src, sep2, tgt = arrow.partition("->")
            if not sep or not sep2:
                raise ParseError(
                    f"line {lineno}: expected 'gen <name> : <src> -> <tgt>'"
                )
            gens.append(Generator(gname.strip(), src.strip(), tgt.strip()))
        elif head == "rel":
            rname, sep, eqn = rest.partition(":")
            lhs, sep2, rhs = eqn.partition("=")
            if not sep or not sep2:
                raise ParseError(
                    f"line {lineno}: expected 'rel <name> : <expr> = <expr>'"
                )
            rel_lines.append((lineno, rname.strip(), lhs.strip(), rhs.strip()))
        elif head == "base":
            if not rest or " " in rest:
                raise ParseError(f"line {lineno}: expected 'base <name>'")
            basepoint = rest
        else:
            raise ParseError(f"line {lineno}: unknown directive '{head}'")
    if not points:
        raise ParseError("space file declares no points")
    if basepoint is None:
        basepoint = points[0]
    skeleton = SpacePresentation(
        name=name,
        points=tuple(points),
        generators=tuple(gens),
        relations=(),
        basepoint=basepoint,
    )
    from .syntax import parse_path

    rels: list[Relation] = []
    for lineno, rname, lhs_text, rhs_text in rel_lines:
        try:
            lhs = parse_path(skeleton, lhs_text)
            rhs = parse_path(skeleton, rhs_text)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        rels.append(Relation(rname, lhs, rhs))
    space = SpacePresentation(
        name=name,
        points=tuple(points),
        generators=tuple(gens),
        relations=tuple(rels),
        basepoint=basepoint,
    )
    violations = validate(space)
    if violations:
        raise ParseError("invalid space: " + "; ".join(violations))
    return space


def parse_space_file(path: str | Path) -> SpacePresentation:
    p = Path(path)
    return parse_space_text(p.read_text(), name=p.stem)
