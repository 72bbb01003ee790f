"""Text form of path terms: a small expression grammar plus renderers.

Grammar (loosest to tightest):

    expr    := unary ("*" unary)*            left-associative composition
    unary   := "~" unary | postfix           inverse
    postfix := primary ("^" integer)*        integer power of a loop
    primary := "refl" | "refl(" point ")" | generator | "(" expr ")"

Bare `refl` is only accepted in single-point spaces. The rp2 generator is
written `alpha` (ASCII) on input; renderers print it as the single letter
form, which the parser also accepts.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .errors import ParseError
from .terms import Gen, PathExpr, Refl, Symm, Trans, zpow

if TYPE_CHECKING:
    from .rewrite import Word
    from .spaces import SpacePresentation

_GREEK_ALPHA = "α"
_SYMBOLS = {"*", "~", "^", "(", ")"}


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(("sym", ch))
            i += 1
            continue
        if ch == "-" and i + 1 < n and text[i + 1].isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
            continue
        raise ParseError(f"unexpected character '{ch}'")
    return tokens


class _Parser:
    def __init__(self, space: "SpacePresentation", text: str):
        self.space = space
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, value: str) -> None:
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected '{value}', found '{tok[1]}'")

    def parse(self) -> PathExpr:
        expr = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected token '{tok[1]}'")
        return expr

    def expr(self) -> PathExpr:
        left = self.unary()
        while True:
            tok = self.peek()
            if tok is None or tok[1] != "*":
                return left
            self.take()
            right = self.unary()
            left = Trans(left, right)

    def unary(self) -> PathExpr:
        tok = self.peek()
        if tok is not None and tok[1] == "~":
            self.take()
            return Symm(self.unary())
        return self.postfix()

    def postfix(self) -> PathExpr:
        term = self.primary()
        while True:
            tok = self.peek()
            if tok is None or tok[1] != "^":
                return term
            self.take()
            kind, value = self.take()
            if kind != "int":
                raise ParseError(f"expected an integer exponent, found '{value}'")
            term = zpow(self.space, term, int(value))

    def primary(self) -> PathExpr:
        kind, value = self.take()
        if value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name" and value == "refl":
            tok = self.peek()
            if tok is not None and tok[1] == "(":
                self.take()
                pkind, point = self.take()
                if pkind != "name":
                    raise ParseError(f"expected a point name, found '{point}'")
                self.expect(")")
                if point not in self.space.point_set:
                    raise ParseError(
                        f"'{point}' is not a point of '{self.space.name}'"
                    )
                return Refl(point)
            if len(self.space.points) != 1:
                raise ParseError(
                    f"bare 'refl' is ambiguous in '{self.space.name}'; "
                    "write refl(<point>)"
                )
            return Refl(self.space.points[0])
        if kind == "name":
            name = self._resolve_generator(value)
            return Gen(name)
        raise ParseError(f"unexpected token '{value}'")

    def _resolve_generator(self, name: str) -> str:
        gmap = self.space.generator_map
        if name in gmap:
            return name
        if name == _GREEK_ALPHA and "alpha" in gmap:
            return "alpha"
        raise ParseError(
            f"'{name}' is not a generator of '{self.space.name}'"
        )


def parse_path(space: "SpacePresentation", text: str) -> PathExpr:
    """Parse a path expression against a presentation."""
    if not text.strip():
        raise ParseError("empty path expression")
    return _Parser(space, text).parse()


def _display(space: "SpacePresentation", name: str) -> str:
    if space.name == "rp2" and name == "alpha":
        return _GREEK_ALPHA
    return name


def render_path(space: "SpacePresentation", p: PathExpr) -> str:
    """Grammar-conformant text for a term; parse_path round-trips it."""
    if isinstance(p, Refl):
        if len(space.points) == 1:
            return "refl"
        return f"refl({p.point})"
    if isinstance(p, Gen):
        return _display(space, p.name)
    if isinstance(p, Symm):
        inner = render_path(space, p.inner)
        if isinstance(p.inner, Trans):
            return f"~({inner})"
        return f"~{inner}"
    if isinstance(p, Trans):
        left = render_path(space, p.first)
        right = render_path(space, p.second)
        if isinstance(p.second, Trans):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not a path term: {p!r}")


def render_word(space: "SpacePresentation", word: "Word") -> str:
    """Text for a normal-form word; empty words render as constant paths."""
    if not word.letters:
        if len(space.points) == 1:
            return "refl"
        return f"refl({word.src})"
    parts = []
    for name, sign in word.letters:
        shown = _display(space, name)
        parts.append(shown if sign > 0 else f"~{shown}")
    return " * ".join(parts)
