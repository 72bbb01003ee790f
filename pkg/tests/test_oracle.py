"""Tests for the search oracle, the enumerators, and the seeded RNG."""

import pytest

from pathrw.errors import EndpointMismatchError, UnreachableEndpointsError
from pathrw.oracle import (
    BUDGET_EXHAUSTED,
    EQUAL,
    NOT_EQUAL_WITHIN_BUDGET,
    Budget,
    Lcg,
    bfs_rw_eq,
    enumerate_loops,
    enumerate_terms,
    explore_class,
    local_confluence_probe,
    random_term,
)
from pathrw.rewrite import apply_step, normalize, redexes
from pathrw.spaces import BUILTIN_NAMES, builtin
from pathrw.syntax import parse_path, render_path
from pathrw.terms import Gen, Refl, Symm, Trans, endpoints, size

CIRCLE = builtin("circle")
CYL = builtin("cylinder")
TORUS = builtin("torus")
KLEIN = builtin("klein")
RP2 = builtin("rp2")

ALL_SPACES = tuple(builtin(n) for n in BUILTIN_NAMES)


class TestLcg:
    def test_fixed_constants_give_fixed_streams(self):
        # Frozen outputs; a change here breaks seed reproducibility for
        # every downstream consumer.
        assert [Lcg(0).next_raw() for _ in range(1)] == [376796944]
        g = Lcg(0)
        assert [g.next_raw() for _ in range(4)] == [
            376796944,
            1430272678,
            1508001829,
            1580525473,
        ]
        g = Lcg(12345)
        assert [g.next_raw() for _ in range(4)] == [
            1598009323,
            255616456,
            1857150537,
            1789376287,
        ]

    def test_same_seed_same_stream(self):
        a, b = Lcg(99), Lcg(99)
        assert [a.next_raw() for _ in range(20)] == [b.next_raw() for _ in range(20)]

    def test_different_seeds_diverge(self):
        a, b = Lcg(1), Lcg(2)
        assert [a.next_raw() for _ in range(8)] != [b.next_raw() for _ in range(8)]

    def test_randint_stays_in_range(self):
        g = Lcg(7)
        draws = [g.randint(13) for _ in range(500)]
        assert all(0 <= d < 13 for d in draws)
        assert len(set(draws)) > 1

    def test_randint_bound_one(self):
        g = Lcg(3)
        assert all(g.randint(1) == 0 for _ in range(10))

    def test_randint_rejects_nonpositive_bound(self):
        with pytest.raises(ValueError):
            Lcg(0).randint(0)

    def test_choice_is_seeded(self):
        items = ["w", "x", "y", "z"]
        picks = [Lcg(11).choice(items) for _ in range(3)]
        assert picks[0] == picks[1] == picks[2]
        assert picks[0] in items


class TestEnumerateTerms:
    def test_size_one_is_leaves(self):
        assert enumerate_terms(CIRCLE, 1, "pt", "pt") == (Refl("pt"), Gen("a"))
        assert enumerate_terms(CYL, 1, "b0", "b1") == (Gen("s"),)
        assert enumerate_terms(CYL, 1, "b0", "b0") == (Refl("b0"), Gen("l0"))

    def test_size_two_reversed_leg(self):
        # Only inverses fit in two nodes.
        assert enumerate_terms(CYL, 2, "b1", "b0") == (Symm(Gen("s")),)

    def test_counts_small_circle(self):
        counts = [len(enumerate_terms(CIRCLE, n, "pt", "pt")) for n in range(1, 8)]
        assert counts == [2, 2, 6, 14, 42, 122, 382]

    def test_counts_small_torus(self):
        counts = [len(enumerate_terms(TORUS, n, "pt", "pt")) for n in range(1, 5)]
        assert counts == [3, 3, 12, 30]

    def test_every_term_has_requested_shape(self):
        for space in (CIRCLE, CYL, TORUS):
            for src in space.points:
                for tgt in space.points:
                    for n in range(1, 6):
                        for t in enumerate_terms(space, n, src, tgt):
                            assert size(t) == n
                            assert endpoints(space, t) == (src, tgt)

    def test_no_duplicates(self):
        terms = enumerate_terms(KLEIN, 5, "pt", "pt")
        assert len(terms) == len(set(terms))

    def test_nonpositive_size_is_empty(self):
        assert enumerate_terms(CIRCLE, 0, "pt", "pt") == ()
        assert enumerate_terms(CIRCLE, -3, "pt", "pt") == ()

    def test_memoized(self):
        first = enumerate_terms(TORUS, 4, "pt", "pt")
        assert enumerate_terms(TORUS, 4, "pt", "pt") is first


class TestEnumerateLoops:
    def test_circle_stream_prefix(self):
        got = [render_path(CIRCLE, t) for t in enumerate_loops(CIRCLE, 2)]
        assert got == ["refl", "a", "~a", "a * a", "~a * ~a"]

    def test_torus_single_letters_in_declaration_order(self):
        got = [render_path(TORUS, t) for t in enumerate_loops(TORUS, 1)]
        assert got == ["refl", "a", "b", "~a", "~b"]

    def test_cylinder_loops_avoid_leaving_base(self):
        # s * ~s would be an immediate inverse pair, so nothing of length two
        # passes through b1.
        got = [render_path(CYL, t) for t in enumerate_loops(CYL, 2)]
        assert got == ["refl(b0)", "l0", "~l0", "l0 * l0", "~l0 * ~l0"]

    def test_loops_are_loops(self):
        base = KLEIN.basepoint
        for t in enumerate_loops(KLEIN, 3):
            assert endpoints(KLEIN, t) == (base, base)

    def test_shortest_first(self):
        # Letter counts never decrease along the stream.
        def letter_count(t):
            if isinstance(t, Refl):
                return 0
            if isinstance(t, (Gen, Symm)):
                return 1
            return letter_count(t.first) + letter_count(t.second)

        counts = [letter_count(t) for t in enumerate_loops(TORUS, 3)]
        assert counts == sorted(counts)

    def test_stream_is_deterministic(self):
        a = list(enumerate_loops(RP2, 4))
        b = list(enumerate_loops(RP2, 4))
        assert a == b


class TestRandomTerm:
    def test_forced_choices(self):
        assert random_term(CYL, 1, Lcg(0), "b0", "b1") == Gen("s")
        assert random_term(CYL, 2, Lcg(0), "b1", "b0") == Symm(Gen("s"))

    def test_unreachable_endpoints(self):
        with pytest.raises(UnreachableEndpointsError):
            random_term(CYL, 1, Lcg(0), "b1", "b0")

    def test_size_and_endpoints_hold(self):
        rng = Lcg(17)
        for space in ALL_SPACES:
            for n in range(1, 13):
                t = random_term(space, n, rng)
                assert size(t) == n
                src, tgt = endpoints(space, t)
                assert src in space.point_set and tgt in space.point_set

    def test_pinned_endpoints_hold(self):
        rng = Lcg(19)
        for n in (4, 7, 10):
            t = random_term(CYL, n, rng, "b0", "b1")
            assert endpoints(CYL, t) == ("b0", "b1")

    def test_seed_determinism(self):
        for space in (CIRCLE, KLEIN):
            a = random_term(space, 9, 31)
            b = random_term(space, 9, 31)
            assert a == b

    def test_int_seed_matches_fresh_generator(self):
        assert random_term(TORUS, 8, 5) == random_term(TORUS, 8, Lcg(5))

    def test_stream_continues_rather_than_repeating(self):
        rng = Lcg(23)
        draws = {random_term(CIRCLE, 7, rng) for _ in range(12)}
        assert len(draws) > 1


class TestBfsVerdicts:
    def test_identical_terms_cost_nothing(self):
        t = parse_path(TORUS, "a * b")
        v = bfs_rw_eq(TORUS, t, t)
        assert v.kind == EQUAL and v.explored == 0

    def test_endpoint_mismatch_rejected(self):
        with pytest.raises(EndpointMismatchError):
            bfs_rw_eq(CYL, Gen("s"), Gen("l0"))

    def test_cancellation_found(self):
        v = bfs_rw_eq(CIRCLE, parse_path(CIRCLE, "a * ~a"), Refl("pt"))
        assert v.is_equal

    def test_distinct_windings_separated(self):
        v = bfs_rw_eq(CIRCLE, Gen("a"), parse_path(CIRCLE, "a * a"))
        assert v.kind == NOT_EQUAL_WITHIN_BUDGET
        assert v.is_decided and not v.is_equal

    def test_generator_is_not_the_identity(self):
        v = bfs_rw_eq(CIRCLE, Gen("a"), Refl("pt"))
        assert v.kind == NOT_EQUAL_WITHIN_BUDGET

    def test_torus_letters_commute(self):
        v = bfs_rw_eq(TORUS, parse_path(TORUS, "a * b"), parse_path(TORUS, "b * a"))
        assert v.is_equal

    @pytest.mark.parametrize(
        "left,right",
        [
            ("b * a", "a * ~b"),
            ("b * ~a", "~a * ~b"),
            ("~b * a", "a * b"),
            ("~b * ~a", "~a * b"),
        ],
    )
    def test_klein_exchange_pairs(self, left, right):
        v = bfs_rw_eq(KLEIN, parse_path(KLEIN, left), parse_path(KLEIN, right))
        assert v.is_equal

    def test_klein_letters_do_not_commute(self):
        v = bfs_rw_eq(KLEIN, parse_path(KLEIN, "b * a"), parse_path(KLEIN, "a * b"))
        assert v.kind == NOT_EQUAL_WITHIN_BUDGET

    def test_projective_double_loop_bounds(self):
        v = bfs_rw_eq(RP2, parse_path(RP2, "alpha * alpha"), Refl("pt"))
        assert v.is_equal
        w = bfs_rw_eq(RP2, Gen("alpha"), Refl("pt"))
        assert w.kind == NOT_EQUAL_WITHIN_BUDGET

    def test_budget_exhaustion_is_undecided(self):
        v = bfs_rw_eq(
            KLEIN,
            parse_path(KLEIN, "b * a"),
            parse_path(KLEIN, "a * ~b"),
            Budget(max_states=3),
        )
        assert v.kind == BUDGET_EXHAUSTED
        assert not v.is_decided
        assert v.explored <= 3

    def test_single_steps_are_sound(self):
        rng = Lcg(37)
        for space in ALL_SPACES:
            for _ in range(6):
                t = random_term(space, 1 + rng.randint(5), rng)
                steps = redexes(space, t)
                if not steps:
                    continue
                stepped = apply_step(space, t, rng.choice(steps))
                assert bfs_rw_eq(space, t, stepped).is_equal

    def test_agrees_with_normalizer_on_small_pairs(self):
        rng = Lcg(43)
        for space in ALL_SPACES:
            base = space.basepoint
            for _ in range(4):
                p = random_term(space, 1 + rng.randint(3), rng, base, base)
                q = random_term(space, 1 + rng.randint(3), rng, base, base)
                verdict = bfs_rw_eq(space, p, q)
                if not verdict.is_decided:
                    continue
                assert verdict.is_equal == (normalize(space, p) == normalize(space, q))


class TestExploreClass:
    def test_identity_class_under_tight_cap(self):
        seen, complete = explore_class(
            CIRCLE, Refl("pt"), Budget(max_states=100_000, max_term_size=3)
        )
        assert complete
        assert {render_path(CIRCLE, t) for t in seen} == {
            "refl",
            "refl * refl",
            "~refl",
            "~~refl",
        }

    def test_identity_class_grows_with_cap(self):
        seen, complete = explore_class(
            CIRCLE, Refl("pt"), Budget(max_states=100_000, max_term_size=5)
        )
        assert complete
        assert len(seen) == 21

    def test_members_stay_under_cap_and_in_class(self):
        start = parse_path(TORUS, "a * b")
        seen, complete = explore_class(
            TORUS, start, Budget(max_states=100_000, max_term_size=6)
        )
        assert complete
        nf = normalize(TORUS, start)
        for t in seen:
            assert size(t) <= 6
            assert normalize(TORUS, t) == nf
        assert parse_path(TORUS, "b * a") in seen

    def test_starved_budget_reports_incomplete(self):
        seen, complete = explore_class(
            KLEIN, parse_path(KLEIN, "a * b * a"), Budget(max_states=2)
        )
        assert not complete
        assert len(seen) >= 1


class TestLocalConfluence:
    def test_normal_forms_pass_trivially(self):
        assert local_confluence_probe(CIRCLE, Gen("a"))
        assert local_confluence_probe(TORUS, Refl("pt"))

    def test_random_terms_pass(self):
        rng = Lcg(47)
        for space in ALL_SPACES:
            for _ in range(30):
                t = random_term(space, 1 + rng.randint(9), rng)
                assert local_confluence_probe(space, t)
