import pytest
from hypothesis import given, settings, strategies as st

from pathrw import (
    EndpointMismatchError,
    Gen,
    Lcg,
    Refl,
    SpaceMismatchError,
    Symm,
    Trans,
    UnknownPointError,
    builtin,
    class_of,
    comp,
    endpoints,
    identity,
    inv,
    random_term,
    zpow_class,
)

CIRCLE = builtin("circle")
CYL = builtin("cylinder")
TORUS = builtin("torus")

ALL = [builtin(n) for n in ("circle", "cylinder", "mobius", "torus", "klein", "rp2")]


def chain(space, rng, sizes):
    """Terms whose endpoints line up for composition."""
    terms = []
    point = rng.choice(tuple(space.points))
    for n in sizes:
        t = random_term(space, n, rng, src=point)
        terms.append(t)
        point = endpoints(space, t)[1]
    return terms


class TestBasics:
    def test_class_identifies_rewrite_equal_terms(self):
        assert class_of(TORUS, Trans(Gen("a"), Gen("b"))) == class_of(
            TORUS, Trans(Gen("b"), Gen("a"))
        )

    def test_class_separates_distinct_terms(self):
        assert class_of(TORUS, Gen("a")) != class_of(TORUS, Gen("b"))

    def test_classes_hash_consistently(self):
        c1 = class_of(CIRCLE, Trans(Gen("a"), Symm(Gen("a"))))
        c2 = identity(CIRCLE, "pt")
        assert c1 == c2
        assert len({c1, c2}) == 1

    def test_identity_requires_known_point(self):
        with pytest.raises(UnknownPointError):
            identity(CIRCLE, "zz")

    def test_endpoints_exposed(self):
        c = class_of(CYL, Gen("s"))
        assert (c.src, c.tgt) == ("b0", "b1")

    def test_representative_is_canonical(self):
        c = class_of(TORUS, Trans(Gen("b"), Gen("a")))
        assert c.representative() == Trans(Gen("a"), Gen("b"))

    def test_space_mismatch_rejected(self):
        c1 = class_of(CIRCLE, Gen("a"))
        c2 = class_of(TORUS, Gen("a"))
        with pytest.raises(SpaceMismatchError):
            comp(c1, c2)

    def test_comp_endpoint_mismatch(self):
        c_seg = class_of(CYL, Gen("s"))
        with pytest.raises(EndpointMismatchError):
            comp(c_seg, c_seg)


class TestLaws:
    @settings(max_examples=80, deadline=None)
    @given(
        name=st.sampled_from(["circle", "cylinder", "mobius", "torus", "klein", "rp2"]),
        seed=st.integers(0, 10**9),
    )
    def test_associativity(self, name, seed):
        space = builtin(name)
        rng = Lcg(seed)
        t1, t2, t3 = chain(space, rng, [1 + rng.randint(8) for _ in range(3)])
        c1, c2, c3 = (class_of(space, t) for t in (t1, t2, t3))
        assert comp(comp(c1, c2), c3) == comp(c1, comp(c2, c3))

    @settings(max_examples=80, deadline=None)
    @given(
        name=st.sampled_from(["circle", "cylinder", "mobius", "torus", "klein", "rp2"]),
        seed=st.integers(0, 10**9),
    )
    def test_units_and_inverses(self, name, seed):
        space = builtin(name)
        rng = Lcg(seed)
        (t,) = chain(space, rng, [1 + rng.randint(10)])
        c = class_of(space, t)
        src, tgt = endpoints(space, t)
        assert comp(identity(space, src), c) == c
        assert comp(c, identity(space, tgt)) == c
        assert comp(c, inv(c)) == identity(space, src)
        assert comp(inv(c), c) == identity(space, tgt)
        assert inv(inv(c)) == c

    def test_inverse_antihomomorphism(self):
        rng = Lcg(99)
        for space in ALL:
            for _ in range(20):
                t1, t2 = chain(space, rng, [1 + rng.randint(8), 1 + rng.randint(8)])
                c1, c2 = class_of(space, t1), class_of(space, t2)
                assert inv(comp(c1, c2)) == comp(inv(c2), inv(c1))


class TestPowers:
    def test_zero_power_is_identity(self):
        c = class_of(CIRCLE, Gen("a"))
        assert zpow_class(c, 0) == identity(CIRCLE, "pt")

    def test_powers_add(self):
        c = class_of(CIRCLE, Gen("a"))
        assert comp(zpow_class(c, 2), zpow_class(c, 3)) == zpow_class(c, 5)
        assert comp(zpow_class(c, 2), zpow_class(c, -5)) == zpow_class(c, -3)

    def test_negative_power_is_inverse_power(self):
        c = class_of(TORUS, Trans(Gen("a"), Gen("b")))
        assert zpow_class(c, -3) == inv(zpow_class(c, 3))

    def test_power_law_randomized(self):
        rng = Lcg(31)
        for space in ALL:
            base = space.basepoint
            for _ in range(15):
                t = random_term(space, 1 + rng.randint(8), rng, base, base)
                c = class_of(space, t)
                m = rng.randint(9) - 4
                n = rng.randint(9) - 4
                assert comp(zpow_class(c, m), zpow_class(c, n)) == zpow_class(c, m + n)
