"""Independent cross-checks for the normalizer.

The oracle decides path equality by breadth-first search over single rule
applications, never by comparing normal forms, so it shares no code path
with `normalize`. Search states are terms; edges are reduction steps plus
the size-bounded introduction steps, which makes the step graph symmetric:
within a size cap, the set reachable from a term is its whole equivalence
class, and exhausting it without meeting the target is a genuine "not equal
at this size" answer rather than a timeout.

Also here: a deterministic random term generator (a fixed 64-bit linear
congruential generator, so seeds mean the same thing everywhere), exhaustive
loop and term enumerators, and a one-step confluence probe.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import EndpointMismatchError, UnreachableEndpointsError
from .rewrite import (
    _preorder,
    _replace_at,
    apply_step,
    normalize,
    redexes,
)
from .spaces import SpacePresentation
from .terms import Gen, PathExpr, Refl, Symm, Trans, endpoints, size

DEFAULT_MAX_STATES = 200_000
DEFAULT_SIZE_MARGIN = 6

EQUAL = "EQUAL"
NOT_EQUAL_WITHIN_BUDGET = "NOT_EQUAL_WITHIN_BUDGET"
BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"


@dataclass(frozen=True)
class Budget:
    """Search limits. When max_term_size is None, bfs_rw_eq allows the
    larger input plus a fixed margin."""

    max_states: int = DEFAULT_MAX_STATES
    max_term_size: int | None = None


@dataclass(frozen=True)
class OracleVerdict:
    kind: str
    explored: int

    @property
    def is_equal(self) -> bool:
        return self.kind == EQUAL

    @property
    def is_decided(self) -> bool:
        return self.kind != BUDGET_EXHAUSTED


# ---------------------------------------------------------------------------
# seeded randomness

LCG_MUL = 6364136223846793005
LCG_INC = 1442695040888963407
SEED_MIX = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator with fixed constants, so a seed
    names the same sample sequence on every platform."""

    def __init__(self, seed: int):
        self.state = (seed ^ SEED_MIX) & _MASK64

    def next_raw(self) -> int:
        self.state = (self.state * LCG_MUL + LCG_INC) & _MASK64
        return self.state >> 33

    def randint(self, bound: int) -> int:
        """Uniform-enough draw from range(bound); bound stays tiny here, so
        the modulo bias is far below anything a test could see."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_raw() % bound

    def choice(self, seq):
        return seq[self.randint(len(seq))]


# ---------------------------------------------------------------------------
# enumeration

def _leaf_options(space: SpacePresentation, src: str, tgt: str) -> tuple[PathExpr, ...]:
    opts: list[PathExpr] = []
    if src == tgt:
        opts.append(Refl(src))
    for g in space.generators:
        if g.src == src and g.tgt == tgt:
            opts.append(Gen(g.name))
    return tuple(opts)


@lru_cache(maxsize=None)
def _feasible(space: SpacePresentation, n: int, src: str, tgt: str) -> bool:
    if n <= 0:
        return False
    if n == 1:
        return bool(_leaf_options(space, src, tgt))
    if _feasible(space, n - 1, tgt, src):
        return True
    for k in range(1, n - 1):
        for mid in space.points:
            if _feasible(space, k, src, mid) and _feasible(space, n - 1 - k, mid, tgt):
                return True
    return False


@lru_cache(maxsize=None)
def enumerate_terms(
    space: SpacePresentation, n: int, src: str, tgt: str
) -> tuple[PathExpr, ...]:
    """Every term of exactly n nodes running src -> tgt. Memoized; keep n
    small."""
    if n <= 0:
        return ()
    if n == 1:
        return _leaf_options(space, src, tgt)
    out: list[PathExpr] = [
        Symm(q) for q in enumerate_terms(space, n - 1, tgt, src)
    ]
    for k in range(1, n - 1):
        for mid in space.points:
            for left in enumerate_terms(space, k, src, mid):
                for right in enumerate_terms(space, n - 1 - k, mid, tgt):
                    out.append(Trans(left, right))
    return tuple(out)


def enumerate_loops(space: SpacePresentation, max_len: int):
    """All basepoint loop terms whose letter sequences have length at most
    max_len and no adjacent inverse pair, shortest first. Letters are tried
    in generator declaration order, forward before backward, so the stream
    is deterministic."""
    base = space.basepoint
    yield Refl(base)
    for length in range(1, max_len + 1):
        for letters in _loops_of_length(space, base, length):
            yield _term_of_letters(letters, base)


def _loops_of_length(space: SpacePresentation, base: str, length: int):
    def go(point: str, letters: list[tuple[str, int]]):
        if len(letters) == length:
            if point == base:
                yield tuple(letters)
            return
        for g in space.generators:
            if g.src == point and letters[-1:] != [(g.name, -1)]:
                letters.append((g.name, 1))
                yield from go(g.tgt, letters)
                letters.pop()
        for g in space.generators:
            if g.tgt == point and letters[-1:] != [(g.name, 1)]:
                letters.append((g.name, -1))
                yield from go(g.src, letters)
                letters.pop()

    yield from go(base, [])


def _term_of_letters(letters, base: str) -> PathExpr:
    if not letters:
        return Refl(base)
    lits = [Gen(n) if s > 0 else Symm(Gen(n)) for n, s in letters]
    acc = lits[0]
    for lit in lits[1:]:
        acc = Trans(acc, lit)
    return acc


def random_term(
    space: SpacePresentation,
    n: int,
    rng: Lcg | int,
    src: str | None = None,
    tgt: str | None = None,
) -> PathExpr:
    """A pseudorandom term of exactly n nodes. Pass a seed or a generator;
    pin endpoints to constrain them, else they are drawn. Raises
    UnreachableEndpointsError when no term of that size fits."""
    if isinstance(rng, int):
        rng = Lcg(rng)
    if src is None or tgt is None:
        pairs = [
            (s, t)
            for s in space.points
            for t in space.points
            if (src is None or s == src)
            and (tgt is None or t == tgt)
            and _feasible(space, n, s, t)
        ]
        if not pairs:
            raise UnreachableEndpointsError(
                f"no term of size {n} with the requested endpoints in "
                f"'{space.name}'"
            )
        src, tgt = rng.choice(pairs)
    if not _feasible(space, n, src, tgt):
        raise UnreachableEndpointsError(
            f"no term of size {n} from '{src}' to '{tgt}' in '{space.name}'"
        )
    return _random_term(space, rng, n, src, tgt)


def _random_term(
    space: SpacePresentation, rng: Lcg, n: int, src: str, tgt: str
) -> PathExpr:
    if n == 1:
        return rng.choice(_leaf_options(space, src, tgt))
    splits = [
        (k, mid)
        for k in range(1, n - 1)
        for mid in space.points
        if _feasible(space, k, src, mid) and _feasible(space, n - 1 - k, mid, tgt)
    ]
    can_symm = _feasible(space, n - 1, tgt, src)
    # Lean toward composition so generated terms branch instead of stacking
    # inverse wrappers.
    if splits and (not can_symm or rng.randint(4) != 0):
        k, mid = rng.choice(splits)
        left = _random_term(space, rng, k, src, mid)
        right = _random_term(space, rng, n - 1 - k, mid, tgt)
        return Trans(left, right)
    return Symm(_random_term(space, rng, n - 1, tgt, src))


# ---------------------------------------------------------------------------
# the search oracle

def _neighbors(space: SpacePresentation, t: PathExpr, cap: int) -> list[PathExpr]:
    out: list[PathExpr] = []
    for step in redexes(space, t):
        out.append(apply_step(space, t, step))
    size_t = size(t)
    for pos, sub in _preorder(t):
        s, tg = endpoints(space, sub)
        if size_t + 2 <= cap:
            out.append(_replace_at(t, pos, Trans(Refl(s), sub)))
            out.append(_replace_at(t, pos, Trans(sub, Refl(tg))))
            out.append(_replace_at(t, pos, Symm(Symm(sub))))
        if (
            isinstance(sub, Trans)
            and isinstance(sub.first, Symm)
            and isinstance(sub.second, Symm)
        ):
            out.append(
                _replace_at(t, pos, Symm(Trans(sub.second.inner, sub.first.inner)))
            )
        if isinstance(sub, Refl):
            if size_t + 1 <= cap:
                out.append(_replace_at(t, pos, Symm(sub)))
            payload_cap = (cap - size_t - 1) // 2
            for qn in range(1, payload_cap + 1):
                for other in space.points:
                    for q in enumerate_terms(space, qn, other, sub.point):
                        out.append(_replace_at(t, pos, Trans(Symm(q), q)))
                    for q in enumerate_terms(space, qn, sub.point, other):
                        out.append(_replace_at(t, pos, Trans(q, Symm(q))))
    return out


def bfs_rw_eq(
    space: SpacePresentation,
    p: PathExpr,
    q: PathExpr,
    budget: Budget | None = None,
) -> OracleVerdict:
    """Search for a rewrite derivation between p and q. EQUAL is definitive;
    NOT_EQUAL_WITHIN_BUDGET means one side's entire size-capped class was
    enumerated without meeting the other; BUDGET_EXHAUSTED decides nothing.

    The search runs from both ends at once. Every step has an inverse step,
    so an edge usable in one direction is usable in the other and a meeting
    point witnesses a full derivation."""
    if endpoints(space, p) != endpoints(space, q):
        raise EndpointMismatchError(
            "the oracle compares paths with identical endpoints"
        )
    if budget is None:
        budget = Budget()
    cap = budget.max_term_size
    if cap is None:
        cap = max(size(p), size(q)) + DEFAULT_SIZE_MARGIN
    if p == q:
        return OracleVerdict(EQUAL, 0)
    seen_p: set[PathExpr] = {p}
    seen_q: set[PathExpr] = {q}
    front_p: deque[PathExpr] = deque([p])
    front_q: deque[PathExpr] = deque([q])
    explored = 0
    while front_p and front_q:
        if explored >= budget.max_states:
            return OracleVerdict(BUDGET_EXHAUSTED, explored)
        # expand the thinner side
        if len(front_p) <= len(front_q):
            frontier, seen, other = front_p, seen_p, seen_q
        else:
            frontier, seen, other = front_q, seen_q, seen_p
        t = frontier.popleft()
        explored += 1
        for nb in _neighbors(space, t, cap):
            if size(nb) > cap:
                continue
            if nb in other:
                return OracleVerdict(EQUAL, explored)
            if nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return OracleVerdict(NOT_EQUAL_WITHIN_BUDGET, explored)


def explore_class(
    space: SpacePresentation, p: PathExpr, budget: Budget | None = None
) -> tuple[set[PathExpr], bool]:
    """All terms reachable from p within the budget, plus whether the
    enumeration finished. A finished set is the entire equivalence class of
    p among terms within the size cap."""
    if budget is None:
        budget = Budget()
    cap = budget.max_term_size
    if cap is None:
        cap = size(p) + DEFAULT_SIZE_MARGIN
    seen = {p}
    frontier: deque[PathExpr] = deque([p])
    explored = 0
    while frontier:
        if explored >= budget.max_states:
            return seen, False
        t = frontier.popleft()
        explored += 1
        for nb in _neighbors(space, t, cap):
            if size(nb) > cap or nb in seen:
                continue
            seen.add(nb)
            frontier.append(nb)
    return seen, True


def local_confluence_probe(space: SpacePresentation, p: PathExpr) -> bool:
    """Every single reduction step out of p lands on a term with p's normal
    form. A False is a confluence counterexample."""
    target = normalize(space, p)
    for step in redexes(space, p):
        if normalize(space, apply_step(space, p, step)) != target:
            return False
    return True
