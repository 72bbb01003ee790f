"""Rewrite rules on path terms, normal forms, and replayable certificates.

The reduction rules, in the order `redexes` tries them at each position:

    trans_refl_left    refl . p          ->  p
    trans_refl_right   p . refl          ->  p
    symm_trans_cancel  ~p . p            ->  refl
    trans_symm_cancel  p . ~p            ->  refl
    symm_refl          ~refl             ->  refl
    symm_symm          ~~p               ->  p
    symm_trans_congr   ~(p . q)          ->  ~q . ~p
    assoc_left         (p . q) . r       ->  p . (q . r)
    assoc_right        p . (q . r)       ->  (p . q) . r
    relation_fwd(R)    lhs of R          ->  rhs of R     (exact match)
    relation_bwd(R)    rhs of R          ->  lhs of R     (exact match)

Cancellation fires only on structurally equal operands. Positions address
subterms by child index: 0 under an inverse node or the first leg of a
composition, 1 the second leg.

Every rule above that is not its own inverse also has an `*_intro`
counterpart running right to left (unit introduction, cancellation-pair
introduction with an explicit payload term, inverse-of-inverse introduction,
congruence folding). Intro rules never appear in `redexes`; they exist so
that any derivation in the symmetric closure of the rules, including the
relation-driven reordering the per-space strategies perform, can be written
as a plain forward step list and replayed with `apply_step`.

`normalize` computes words directly (leaf fold, stack cancellation, then the
space's word-level strategy); `trace` performs the same normalization as an
explicit rule-by-rule derivation and records it. The two routes are
independent and the tests hold them equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Callable, Iterator

from .errors import EndpointMismatchError, StepNotEnabledError
from .spaces import GroupTag
from .terms import Gen, PathExpr, Refl, Symm, Trans, endpoints

if TYPE_CHECKING:
    from .spaces import Relation, SpacePresentation

Position = tuple[int, ...]


@dataclass(frozen=True)
class RuleId:
    """A rewrite rule identifier; relation rules carry the relation name."""

    kind: str
    relation: str | None = None

    def __str__(self) -> str:
        if self.relation is None:
            return self.kind
        return f"{self.kind}({self.relation})"


TRANS_REFL_LEFT = RuleId("trans_refl_left")
TRANS_REFL_RIGHT = RuleId("trans_refl_right")
SYMM_TRANS_CANCEL = RuleId("symm_trans_cancel")
TRANS_SYMM_CANCEL = RuleId("trans_symm_cancel")
SYMM_REFL = RuleId("symm_refl")
SYMM_SYMM = RuleId("symm_symm")
SYMM_TRANS_CONGR = RuleId("symm_trans_congr")
ASSOC_LEFT = RuleId("assoc_left")
ASSOC_RIGHT = RuleId("assoc_right")

TRANS_REFL_LEFT_INTRO = RuleId("trans_refl_left_intro")
TRANS_REFL_RIGHT_INTRO = RuleId("trans_refl_right_intro")
SYMM_TRANS_CANCEL_INTRO = RuleId("symm_trans_cancel_intro")
TRANS_SYMM_CANCEL_INTRO = RuleId("trans_symm_cancel_intro")
SYMM_REFL_INTRO = RuleId("symm_refl_intro")
SYMM_SYMM_INTRO = RuleId("symm_symm_intro")
SYMM_TRANS_CONGR_INTRO = RuleId("symm_trans_congr_intro")

GROUPOID_REDUCTION_RULES = (
    TRANS_REFL_LEFT,
    TRANS_REFL_RIGHT,
    SYMM_TRANS_CANCEL,
    TRANS_SYMM_CANCEL,
    SYMM_REFL,
    SYMM_SYMM,
    SYMM_TRANS_CONGR,
    ASSOC_LEFT,
    ASSOC_RIGHT,
)


def relation_fwd(name: str) -> RuleId:
    return RuleId("relation_fwd", name)


def relation_bwd(name: str) -> RuleId:
    return RuleId("relation_bwd", name)


@dataclass(frozen=True)
class RewriteStep:
    """One rule application at one position, with a payload where the rule
    needs an instantiating term (cancellation introduction only)."""

    rule: RuleId
    at: Position = ()
    payload: PathExpr | None = None


@dataclass(frozen=True)
class Word:
    """A freely reduced signed-letter sequence with explicit endpoints,
    so empty words at different points stay distinct."""

    letters: tuple[tuple[str, int], ...]
    src: str
    tgt: str


@dataclass(frozen=True)
class NormalForm:
    """A word in the canonical shape the space's strategy produces."""

    word: Word


def format_position(pos: Position) -> str:
    if not pos:
        return "root"
    return ".".join(str(i) for i in pos)


def format_step(step: RewriteStep, space: "SpacePresentation | None" = None) -> str:
    base = f"{step.rule} @ {format_position(step.at)}"
    if step.payload is None:
        return base
    if space is not None:
        from .syntax import render_path

        return f"{base} [{render_path(space, step.payload)}]"
    return f"{base} [payload]"


# ---------------------------------------------------------------------------
# positions and local rewriting


def subterm_at(p: PathExpr, pos: Position) -> PathExpr:
    cur = p
    for idx in pos:
        if isinstance(cur, Symm) and idx == 0:
            cur = cur.inner
        elif isinstance(cur, Trans) and idx == 0:
            cur = cur.first
        elif isinstance(cur, Trans) and idx == 1:
            cur = cur.second
        else:
            raise StepNotEnabledError(
                f"no subterm at position {format_position(pos)}"
            )
    return cur


def _replace_at(p: PathExpr, pos: Position, new: PathExpr) -> PathExpr:
    if not pos:
        return new
    idx = pos[0]
    rest = pos[1:]
    if isinstance(p, Symm) and idx == 0:
        return Symm(_replace_at(p.inner, rest, new))
    if isinstance(p, Trans) and idx == 0:
        return Trans(_replace_at(p.first, rest, new), p.second)
    if isinstance(p, Trans) and idx == 1:
        return Trans(p.first, _replace_at(p.second, rest, new))
    raise StepNotEnabledError(f"no subterm at position {format_position(pos)}")


def _preorder(p: PathExpr, pos: Position = ()) -> Iterator[tuple[Position, PathExpr]]:
    yield pos, p
    if isinstance(p, Symm):
        yield from _preorder(p.inner, pos + (0,))
    elif isinstance(p, Trans):
        yield from _preorder(p.first, pos + (0,))
        yield from _preorder(p.second, pos + (1,))


@lru_cache(maxsize=128)
def _relation_map(space: "SpacePresentation") -> dict:
    return {rel.name: rel for rel in space.relations}


def _local_result(
    space: "SpacePresentation",
    sub: PathExpr,
    rule: RuleId,
    payload: PathExpr | None,
) -> PathExpr | None:
    """Result of rewriting `sub` in place by `rule`, or None if not enabled."""
    k = rule.kind
    if k == "trans_refl_left":
        if isinstance(sub, Trans) and isinstance(sub.first, Refl):
            return sub.second
    elif k == "trans_refl_right":
        if isinstance(sub, Trans) and isinstance(sub.second, Refl):
            return sub.first
    elif k == "symm_trans_cancel":
        if (
            isinstance(sub, Trans)
            and isinstance(sub.first, Symm)
            and sub.first.inner == sub.second
        ):
            return Refl(endpoints(space, sub.second)[1])
    elif k == "trans_symm_cancel":
        if (
            isinstance(sub, Trans)
            and isinstance(sub.second, Symm)
            and sub.second.inner == sub.first
        ):
            return Refl(endpoints(space, sub.first)[0])
    elif k == "symm_refl":
        if isinstance(sub, Symm) and isinstance(sub.inner, Refl):
            return sub.inner
    elif k == "symm_symm":
        if isinstance(sub, Symm) and isinstance(sub.inner, Symm):
            return sub.inner.inner
    elif k == "symm_trans_congr":
        if isinstance(sub, Symm) and isinstance(sub.inner, Trans):
            return Trans(Symm(sub.inner.second), Symm(sub.inner.first))
    elif k == "assoc_left":
        if isinstance(sub, Trans) and isinstance(sub.first, Trans):
            return Trans(sub.first.first, Trans(sub.first.second, sub.second))
    elif k == "assoc_right":
        if isinstance(sub, Trans) and isinstance(sub.second, Trans):
            return Trans(Trans(sub.first, sub.second.first), sub.second.second)
    elif k == "relation_fwd":
        rel = _relation_map(space).get(rule.relation)
        if rel is not None and sub == rel.lhs:
            return rel.rhs
    elif k == "relation_bwd":
        rel = _relation_map(space).get(rule.relation)
        if rel is not None and sub == rel.rhs:
            return rel.lhs
    elif k == "trans_refl_left_intro":
        return Trans(Refl(endpoints(space, sub)[0]), sub)
    elif k == "trans_refl_right_intro":
        return Trans(sub, Refl(endpoints(space, sub)[1]))
    elif k == "symm_refl_intro":
        if isinstance(sub, Refl):
            return Symm(sub)
    elif k == "symm_symm_intro":
        return Symm(Symm(sub))
    elif k == "symm_trans_congr_intro":
        if (
            isinstance(sub, Trans)
            and isinstance(sub.first, Symm)
            and isinstance(sub.second, Symm)
        ):
            return Symm(Trans(sub.second.inner, sub.first.inner))
    elif k == "symm_trans_cancel_intro":
        if isinstance(sub, Refl) and payload is not None:
            if endpoints(space, payload)[1] == sub.point:
                return Trans(Symm(payload), payload)
    elif k == "trans_symm_cancel_intro":
        if isinstance(sub, Refl) and payload is not None:
            if endpoints(space, payload)[0] == sub.point:
                return Trans(payload, Symm(payload))
    else:
        raise StepNotEnabledError(f"unknown rule '{rule}'")
    return None


@lru_cache(maxsize=128)
def reduction_rules(space: "SpacePresentation") -> tuple[RuleId, ...]:
    """The rules `redexes` enumerates, in their fixed order."""
    rules = list(GROUPOID_REDUCTION_RULES)
    for rel in space.relations:
        rules.append(relation_fwd(rel.name))
    for rel in space.relations:
        rules.append(relation_bwd(rel.name))
    return tuple(rules)


def redexes(space: "SpacePresentation", p: PathExpr) -> list[RewriteStep]:
    """All enabled reduction steps, outermost-leftmost position first and
    rules in their declaration order at each position."""
    rules = reduction_rules(space)
    out: list[RewriteStep] = []
    for pos, sub in _preorder(p):
        for rule in rules:
            if _local_result(space, sub, rule, None) is not None:
                out.append(RewriteStep(rule, pos))
    return out


def apply_step(space: "SpacePresentation", p: PathExpr, step: RewriteStep) -> PathExpr:
    """Apply one step; raises StepNotEnabledError if the pattern is absent."""
    sub = subterm_at(p, step.at)
    new = _local_result(space, sub, step.rule, step.payload)
    if new is None:
        raise StepNotEnabledError(
            f"rule {step.rule} is not enabled at {format_position(step.at)}"
        )
    return _replace_at(p, step.at, new)


# ---------------------------------------------------------------------------
# words and direct normalization


def _letters_of(
    space: "SpacePresentation", p: PathExpr
) -> tuple[list[tuple[str, int]], str, str]:
    if isinstance(p, Refl):
        src, tgt = endpoints(space, p)
        return [], src, tgt
    if isinstance(p, Gen):
        src, tgt = endpoints(space, p)
        return [(p.name, 1)], src, tgt
    if isinstance(p, Symm):
        letters, src, tgt = _letters_of(space, p.inner)
        return [(name, -sign) for name, sign in reversed(letters)], tgt, src
    if isinstance(p, Trans):
        left, src1, tgt1 = _letters_of(space, p.first)
        right, src2, tgt2 = _letters_of(space, p.second)
        if tgt1 != src2:
            raise EndpointMismatchError(
                f"cannot compose: first ends at '{tgt1}', second starts at '{src2}'"
            )
        return left + right, src1, tgt2
    raise TypeError(f"not a path term: {p!r}")


def _reduce_letters(letters: list[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[tuple[str, int]] = []
    for name, sign in letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))
    return tuple(stack)


def free_normalize(space: "SpacePresentation", p: PathExpr) -> Word:
    """The freely reduced word of a term: flatten, push inverses to the
    letters, drop constant paths, cancel adjacent inverse pairs."""
    letters, src, tgt = _letters_of(space, p)
    return Word(_reduce_letters(letters), src, tgt)


def _power_letters(name: str, n: int) -> tuple[tuple[str, int], ...]:
    sign = 1 if n > 0 else -1
    return tuple((name, sign) for _ in range(abs(n)))


def _canonical_word(space: "SpacePresentation", w: Word) -> Word:
    tag = space.group_tag
    if tag is None:
        return w
    if tag is GroupTag.FREE_Z:
        if space.name == "cylinder":
            return _cylinder_canonical(space, w)
        return w
    if tag is GroupTag.ZXZ:
        a = space.generators[0].name
        b = space.generators[1].name
        m = sum(sign for name, sign in w.letters if name == a)
        n = sum(sign for name, sign in w.letters if name == b)
        return Word(_power_letters(a, m) + _power_letters(b, n), w.src, w.tgt)
    if tag is GroupTag.Z_SEMIDIRECT_Z:
        a = space.generators[0].name
        b = space.generators[1].name
        m = 0
        n = 0
        for name, sign in w.letters:
            if name == a:
                m += sign
                n = -n
            else:
                n += sign
        return Word(_power_letters(a, m) + _power_letters(b, n), w.src, w.tgt)
    if tag is GroupTag.Z2:
        g = space.generators[0].name
        if len(w.letters) % 2:
            return Word(((g, 1),), w.src, w.tgt)
        return Word((), w.src, w.tgt)
    raise AssertionError(f"unhandled group tag {tag!r}")


def _cylinder_canonical(space: "SpacePresentation", w: Word) -> Word:
    s = space.generators[0].name
    l0 = space.generators[1].name
    l1 = space.generators[2].name
    letters: list[tuple[str, int]] = []
    for name, sign in w.letters:
        if name == l1:
            letters.extend([(s, -1), (l0, sign), (s, 1)])
        else:
            letters.append((name, sign))
    return Word(_reduce_letters(letters), w.src, w.tgt)


def normalize(space: "SpacePresentation", p: PathExpr) -> NormalForm:
    """Canonical word of a term under the space's strategy. Idempotent."""
    return NormalForm(_canonical_word(space, free_normalize(space, p)))


def rw_eq(space: "SpacePresentation", p: PathExpr, q: PathExpr) -> bool:
    """Decide equality in the rewrite quotient by comparing normal forms.

    Complete for the builtin spaces. A space without a group tag normalizes
    freely, so relations it declares are not consulted here; use the search
    oracle when those matter."""
    if endpoints(space, p) != endpoints(space, q):
        raise EndpointMismatchError(
            "rw_eq compares paths with identical endpoints"
        )
    return normalize(space, p) == normalize(space, q)


def term_of_word(word: Word) -> PathExpr:
    """Read a word back as a term: a left-nested composition of letters."""
    if not word.letters:
        return Refl(word.src)
    lits: list[PathExpr] = [
        Gen(name) if sign > 0 else Symm(Gen(name)) for name, sign in word.letters
    ]
    acc = lits[0]
    for lit in lits[1:]:
        acc = Trans(acc, lit)
    return acc


# ---------------------------------------------------------------------------
# traced normalization: the same normal form, derived step by step


def _letter(lit: PathExpr) -> tuple[str, int] | None:
    if isinstance(lit, Gen):
        return (lit.name, 1)
    if isinstance(lit, Symm) and isinstance(lit.inner, Gen):
        return (lit.inner.name, -1)
    return None


def _cancel_rule(li: PathExpr, lj: PathExpr) -> RuleId | None:
    if isinstance(li, Symm) and li.inner == lj:
        return SYMM_TRANS_CANCEL
    if isinstance(lj, Symm) and lj.inner == li:
        return TRANS_SYMM_CANCEL
    return None


_Template = list[tuple[RuleId, Position, PathExpr | None]]


class _Normalizer:
    """Applies the normalization strategy while recording every step."""

    def __init__(self, space: "SpacePresentation", p: PathExpr):
        self.space = space
        self.term = p
        self.steps: list[RewriteStep] = []

    def apply(self, rule: RuleId, pos: Position, payload: PathExpr | None = None) -> None:
        step = RewriteStep(rule, tuple(pos), payload)
        self.steps.append(step)
        self.term = apply_step(self.space, self.term, step)

    def run_rules(self, rules: tuple[RuleId, ...]) -> None:
        while True:
            hit = None
            for pos, sub in _preorder(self.term):
                for rule in rules:
                    if _local_result(self.space, sub, rule, None) is not None:
                        hit = (rule, pos)
                        break
                if hit:
                    break
            if hit is None:
                return
            self.apply(hit[0], hit[1])

    def literals(self) -> list[tuple[PathExpr, Position]]:
        out: list[tuple[PathExpr, Position]] = []
        cur = self.term
        pos: Position = ()
        while isinstance(cur, Trans):
            out.append((cur.first, pos + (0,)))
            pos = pos + (1,)
            cur = cur.second
        out.append((cur, pos))
        return out

    def eliminate_pair_with(self, i: int, k: int, rule: RuleId) -> None:
        """Collapse adjacent literals i, i+1 to a constant path and drop it."""
        base: Position = (1,) * i
        if i == k - 2:
            self.apply(rule, base)
            if k == 2:
                return
            self.apply(TRANS_REFL_RIGHT, (1,) * (i - 1))
        else:
            self.apply(ASSOC_RIGHT, base)
            self.apply(rule, base + (0,))
            self.apply(TRANS_REFL_LEFT, base)

    def cancel_phase(self) -> None:
        while True:
            lits = self.literals()
            k = len(lits)
            found = None
            for i in range(k - 1):
                rule = _cancel_rule(lits[i][0], lits[i + 1][0])
                if rule is not None:
                    found = (i, rule)
                    break
            if found is None:
                return
            self.eliminate_pair_with(found[0], k, found[1])

    def swap_pair(self, i: int, k: int, template: _Template) -> None:
        """Rewrite the adjacent literal pair at i through a step template."""
        base: Position = (1,) * i
        exposed = i < k - 2
        if exposed:
            self.apply(ASSOC_RIGHT, base)
            node = base + (0,)
        else:
            node = base
        for rule, rel, payload in template:
            self.apply(rule, node + tuple(rel), payload)
        if exposed:
            self.apply(ASSOC_LEFT, base)

    def sort_phase(self, template_fn: Callable[[int, int], _Template]) -> None:
        """Move first-generator letters left past second-generator letters,
        justified by the space's relation, then re-reduce; repeats until
        stable. The swap count is budgeted; exceeding it is a bug."""
        a = self.space.generators[0].name
        b = self.space.generators[1].name
        budget = (len(self.literals()) + 2) ** 2 + 16
        swaps = 0
        while True:
            lits = self.literals()
            k = len(lits)
            found = None
            for i in range(k - 1):
                ci = _letter(lits[i][0])
                cj = _letter(lits[i + 1][0])
                if ci and cj and ci[0] == b and cj[0] == a:
                    found = (i, ci[1], cj[1])
                    break
            if found is None:
                before = self.term
                self.cancel_phase()
                if self.term == before:
                    return
                continue
            i, sb, sa = found
            self.swap_pair(i, k, template_fn(sb, sa))
            swaps += 1
            if swaps > budget:
                raise RuntimeError(
                    "relation phase exceeded its swap budget; this is a bug"
                )

    def cylinder_phase(self) -> None:
        """Eliminate the far loop through the square relation, then cancel."""
        space = self.space
        seg = Gen(space.generators[0].name)
        l1 = space.generators[2].name
        fwd = relation_fwd(space.relations[0].name)
        while True:
            target = None
            for lit, pos in self.literals():
                le = _letter(lit)
                if le is not None and le[0] == l1:
                    target = (pos, le[1])
                    break
            if target is None:
                break
            pos, sign = target
            if sign > 0:
                seq: _Template = [
                    (TRANS_REFL_LEFT_INTRO, (), None),
                    (SYMM_TRANS_CANCEL_INTRO, (0,), seg),
                    (ASSOC_LEFT, (), None),
                    (fwd, (1,), None),
                ]
            else:
                seq = [
                    (TRANS_REFL_LEFT_INTRO, (0,), None),
                    (SYMM_TRANS_CANCEL_INTRO, (0, 0), seg),
                    (ASSOC_LEFT, (0,), None),
                    (fwd, (0, 1), None),
                    (SYMM_TRANS_CONGR, (), None),
                    (SYMM_TRANS_CONGR, (0,), None),
                    (SYMM_SYMM, (1,), None),
                    (ASSOC_LEFT, (), None),
                ]
            for rule, rel, payload in seq:
                self.apply(rule, tuple(pos) + tuple(rel), payload)
            self.run_rules((ASSOC_LEFT,))
        self.cancel_phase()

    def parity_phase(self) -> None:
        """Flip negative letters positive via the squaring relation, then
        drop adjacent positive pairs; leaves the empty or one-letter word."""
        rel = self.space.relations[0]
        fwd = relation_fwd(rel.name)
        bwd = relation_bwd(rel.name)
        while True:
            target = None
            for lit, pos in self.literals():
                le = _letter(lit)
                if le is not None and le[1] < 0:
                    target = pos
                    break
            if target is None:
                break
            seq: _Template = [
                (TRANS_REFL_LEFT_INTRO, (), None),
                (bwd, (0,), None),
                (ASSOC_LEFT, (), None),
                (TRANS_SYMM_CANCEL, (1,), None),
                (TRANS_REFL_RIGHT, (), None),
            ]
            for rule, rpos, payload in seq:
                self.apply(rule, tuple(target) + tuple(rpos), payload)
        while True:
            lits = self.literals()
            k = len(lits)
            found = None
            for i in range(k - 1):
                if isinstance(lits[i][0], Gen) and isinstance(lits[i + 1][0], Gen):
                    found = i
                    break
            if found is None:
                return
            self.eliminate_pair_with(found, k, fwd)

    def word(self) -> Word:
        src, tgt = endpoints(self.space, self.term)
        letters: list[tuple[str, int]] = []
        for lit, _ in self.literals():
            le = _letter(lit)
            if le is not None:
                letters.append(le)
            elif not isinstance(lit, Refl):
                raise AssertionError("normalizer left a non-literal in the spine")
        return Word(tuple(letters), src, tgt)


def _torus_templates(space: "SpacePresentation") -> Callable[[int, int], _Template]:
    rel = space.relations[0].name
    a_gen = Gen(space.generators[0].name)
    b_gen = Gen(space.generators[1].name)
    fwd = relation_fwd(rel)
    bwd = relation_bwd(rel)

    def fn(sb: int, sa: int) -> _Template:
        if sb > 0 and sa > 0:
            return [(bwd, (), None)]
        if sb > 0 and sa < 0:
            return [
                (TRANS_REFL_LEFT_INTRO, (), None),
                (SYMM_TRANS_CANCEL_INTRO, (0,), a_gen),
                (ASSOC_LEFT, (), None),
                (ASSOC_RIGHT, (1,), None),
                (fwd, (1, 0), None),
                (ASSOC_LEFT, (1,), None),
                (TRANS_SYMM_CANCEL, (1, 1), None),
                (TRANS_REFL_RIGHT, (1,), None),
            ]
        if sb < 0 and sa > 0:
            return [
                (TRANS_REFL_RIGHT_INTRO, (), None),
                (TRANS_SYMM_CANCEL_INTRO, (1,), b_gen),
                (ASSOC_LEFT, (), None),
                (ASSOC_RIGHT, (1,), None),
                (fwd, (1, 0), None),
                (ASSOC_LEFT, (1,), None),
                (ASSOC_RIGHT, (), None),
                (SYMM_TRANS_CANCEL, (0,), None),
                (TRANS_REFL_LEFT, (), None),
            ]
        return [
            (SYMM_TRANS_CONGR_INTRO, (), None),
            (fwd, (0,), None),
            (SYMM_TRANS_CONGR, (), None),
        ]

    return fn


def _klein_templates(space: "SpacePresentation") -> Callable[[int, int], _Template]:
    rel = space.relations[0].name
    a_gen = Gen(space.generators[0].name)
    a_inv = Symm(Gen(space.generators[0].name))
    fwd = relation_fwd(rel)
    bwd = relation_bwd(rel)

    def fn(sb: int, sa: int) -> _Template:
        if sb > 0 and sa > 0:
            return [
                (SYMM_SYMM_INTRO, (0,), None),
                (bwd, (0, 0), None),
                (SYMM_TRANS_CONGR, (0,), None),
                (SYMM_SYMM, (0, 0), None),
                (SYMM_TRANS_CONGR, (0, 1), None),
                (ASSOC_LEFT, (), None),
                (ASSOC_LEFT, (1,), None),
                (SYMM_TRANS_CANCEL, (1, 1), None),
                (TRANS_REFL_RIGHT, (1,), None),
            ]
        if sb > 0 and sa < 0:
            return [
                (TRANS_REFL_LEFT_INTRO, (), None),
                (SYMM_TRANS_CANCEL_INTRO, (0,), a_gen),
                (ASSOC_LEFT, (), None),
                (ASSOC_RIGHT, (1,), None),
                (fwd, (1,), None),
            ]
        if sb < 0 and sa > 0:
            return [
                (bwd, (0,), None),
                (ASSOC_LEFT, (), None),
                (SYMM_TRANS_CANCEL, (1,), None),
                (TRANS_REFL_RIGHT, (), None),
            ]
        return [
            (SYMM_TRANS_CONGR_INTRO, (), None),
            (TRANS_REFL_RIGHT_INTRO, (0,), None),
            (TRANS_SYMM_CANCEL_INTRO, (0, 1), a_inv),
            (ASSOC_RIGHT, (0,), None),
            (fwd, (0, 0), None),
            (SYMM_TRANS_CONGR, (), None),
            (SYMM_SYMM, (0,), None),
            (SYMM_SYMM, (1,), None),
        ]

    return fn


def trace(
    space: "SpacePresentation", p: PathExpr
) -> tuple[NormalForm, tuple[RewriteStep, ...]]:
    """Normalize by explicit rule application, returning the normal form and
    the ordered step list. Replaying the steps from p with apply_step lands
    on a term whose letters read off the normal form word."""
    endpoints(space, p)
    nz = _Normalizer(space, p)
    nz.run_rules((SYMM_REFL, SYMM_SYMM, SYMM_TRANS_CONGR))
    nz.run_rules((ASSOC_LEFT,))
    nz.run_rules((TRANS_REFL_LEFT, TRANS_REFL_RIGHT))
    nz.cancel_phase()
    tag = space.group_tag
    if tag is GroupTag.FREE_Z and space.name == "cylinder":
        nz.cylinder_phase()
    elif tag is GroupTag.ZXZ:
        nz.sort_phase(_torus_templates(space))
    elif tag is GroupTag.Z_SEMIDIRECT_Z:
        nz.sort_phase(_klein_templates(space))
    elif tag is GroupTag.Z2:
        nz.parity_phase()
    return NormalForm(nz.word()), tuple(nz.steps)
