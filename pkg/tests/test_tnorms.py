"""T-norm families: evaluation, algebraic laws, images and preimages."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subnormforge.intervals import Interval, IntervalSet
from subnormforge.tnorms import (
    Approx,
    GeneratorSpec,
    generator_tnorm,
    parse_tnorm,
    t_eval,
    t_image,
    t_power,
    t_preimage,
    t_solve_x,
)

F = Fraction

EXACT = [parse_tnorm(s) for s in ("product", "min", "hamacher2", "halfprod")]

fractions_01 = st.fractions(min_value=0, max_value=1, max_denominator=24)


def test_golden_values():
    assert t_eval(parse_tnorm("halfprod"), F(1, 2), F(1, 2)) == F(1, 8)
    assert t_eval(parse_tnorm("halfprod"), F(3, 4), F(3, 4)) == F(9, 16)
    assert t_eval(parse_tnorm("hamacher2"), F(1, 4), F(1, 4)) == F(1, 25)
    assert t_eval(parse_tnorm("product"), F(2, 3), F(3, 4)) == F(1, 2)
    assert t_eval(parse_tnorm("min"), F(2, 3), F(3, 4)) == F(2, 3)


def test_parse_render_roundtrip():
    for desc in ("product", "min", "hamacher2", "halfprod",
                 "gen:neglog", "gen:one-minus-log", "lambda:one-minus-log:1/2"):
        t = parse_tnorm(desc)
        assert str(parse_tnorm(str(t))) == str(t)


def test_parse_rejects_unknown():
    with pytest.raises(ValueError):
        parse_tnorm("lukewarm")
    with pytest.raises(ValueError):
        parse_tnorm("lambda:one-minus-log:3/2")


def test_descriptor_flags():
    flags = {t.family: (t.continuous, t.strictly_monotone, t.strict)
             for t in EXACT}
    assert flags["product"] == (True, True, True)
    assert flags["minimum"] == (True, False, False)
    assert flags["hamacher2"] == (True, True, True)
    assert flags["halfprod"] == (False, True, False)


@pytest.mark.parametrize("t", EXACT, ids=lambda t: t.family)
def test_tnorm_laws_exact(t):
    pts = [F(i, 10) for i in range(11)]
    for x in pts:
        assert t_eval(t, x, F(1)) == x  # neutral element
        assert t_eval(t, x, F(0)) == 0
        for y in pts:
            v = t_eval(t, x, y)
            assert v == t_eval(t, y, x)
            assert v <= min(x, y)
            if t.family != "halfprod":
                for z in pts:
                    assert t_eval(t, t_eval(t, x, y), z) == \
                        t_eval(t, x, t_eval(t, y, z))
    if t.strictly_monotone:
        for x in pts[1:]:
            for i in range(len(pts) - 1):
                assert t_eval(t, x, pts[i]) < t_eval(t, x, pts[i + 1])


def test_halfprod_not_associative():
    # halfprod is commutative, strictly monotone and bounded by min, but
    # the branch boundary breaks associativity, so it is not a t-norm;
    # no classifier route ever treats it as one
    t = parse_tnorm("halfprod")
    x, y, z = F(1, 10), F(3, 5), F(3, 5)
    assert t_eval(t, t_eval(t, x, y), z) != t_eval(t, x, t_eval(t, y, z))


def test_neglog_matches_product():
    t = generator_tnorm(GeneratorSpec("neglog"))
    for i in range(0, 101, 7):
        for j in range(0, 101, 11):
            x, y = F(i, 100), F(j, 100)
            v = t_eval(t, x, y)
            val = v.value if isinstance(v, Approx) else v
            assert abs(float(val) - float(x * y)) <= 1e-12


def test_generator_results_carry_radius():
    t = generator_tnorm(GeneratorSpec("one-minus-log"))
    v = t_eval(t, F(1, 2), F(1, 2))
    assert isinstance(v, Approx)
    assert 0 < v.radius < F(1, 10**20)


def test_t_power_product():
    t = parse_tnorm("product")
    assert t_power(t, F(1, 2), 3) == F(1, 8)
    assert t_power(t, F(1, 2), 1) == F(1, 2)


@pytest.mark.parametrize("t", EXACT, ids=lambda t: t.family)
@given(a=fractions_01, b=fractions_01, c=fractions_01, d=fractions_01,
       x=fractions_01, y=fractions_01)
def test_t_image_contains_pointwise(t, a, b, c, d, x, y):
    ia = Interval.make(min(a, b), max(a, b))
    ib = Interval.make(min(c, d), max(c, d))
    img = t_image(t, IntervalSet.single(ia), IntervalSet.single(ib))
    if ia.contains(x) and ib.contains(y):
        assert img.contains(t_eval(t, x, y))


def test_t_image_halfprod_split():
    # the box [1/4,3/4]^2 straddles the product/halved-product boundary
    box = IntervalSet.single(Interval.closed(F(1, 4), F(3, 4)))
    img = t_image(parse_tnorm("halfprod"), box, box)
    assert img.contains(F(1, 8))    # halved corner: (1/2)(1/2)/2
    assert img.contains(F(9, 16))   # plain corner: (3/4)(3/4)
    assert not img.contains(F(2, 3))


@pytest.mark.parametrize("t", EXACT, ids=lambda t: t.family)
def test_t_solve_x_verified(t):
    for y in (F(1, 3), F(1, 2), F(2, 3), F(1)):
        for z in (F(0), F(1, 8), F(1, 4), F(1, 3), F(1, 2)):
            for x in t_solve_x(t, y, z):
                assert 0 <= x <= 1
                assert t_eval(t, x, y) == z


def test_t_solve_x_halfprod_both_branches():
    # z=1/5, y=4/5: x=z/y=1/4 lands in the plain branch but x=1/2 solves
    # the halved branch at the boundary
    xs = t_solve_x(parse_tnorm("halfprod"), F(4, 5), F(1, 5))
    assert all(t_eval(parse_tnorm("halfprod"), x, F(4, 5)) == F(1, 5)
               for x in xs)
    assert xs


@pytest.mark.parametrize("fam", ["product", "hamacher2"])
def test_t_preimage_membership(fam):
    t = parse_tnorm(fam)
    ziv = Interval.closed(F(1, 8), F(3, 16))
    for yq in (F(1, 2), F(3, 4), F(1)):
        pre = t_preimage(t, yq, ziv)
        for i in range(33):
            x = F(i, 32)
            assert pre.contains(x) == ziv.contains(t_eval(t, x, yq))
