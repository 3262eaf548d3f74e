"""Piecewise monotone functions: evaluation, pseudo-inverse, range
decomposition."""

import random
from fractions import Fraction

import pytest

from conftest import (
    bisect_pseudo_inverse,
    random_nondecreasing_fn,
    random_strictly_increasing_fn,
)
from subnormforge import (
    decompose,
    eval_fn,
    parse_fn,
    plateau_set,
    pseudo_inverse,
    pseudo_inverse_at,
    range_of,
    side_limit,
)
from subnormforge.intervals import Interval
from subnormforge.pwfn import InvalidFunction, PiecewiseMonotoneFn, Segment

F = Fraction


def grid(n):
    return [F(i, n) for i in range(n + 1)]


# -- evaluation and side limits ---------------------------------------------


def test_eval_plateau(f_plateau):
    assert eval_fn(f_plateau, F(1, 4)) == F(1, 2)
    assert eval_fn(f_plateau, F(1, 2)) == F(1, 2)
    assert eval_fn(f_plateau, F(3, 4)) == F(3, 4)
    assert f_plateau(F(1)) == 1


def test_eval_half_jump(f_half_jump):
    assert eval_fn(f_half_jump, F(9, 10)) == F(9, 20)
    assert eval_fn(f_half_jump, F(1)) == 1


def test_eval_outside_domain(f_identity):
    with pytest.raises(ValueError):
        eval_fn(f_identity, F(3, 2))


def test_side_limits(f_half_jump, f_step):
    assert side_limit(f_half_jump, F(1), "left") == F(1, 2)
    assert side_limit(f_step, F(1, 4), "left") == F(5, 16)
    assert side_limit(f_step, F(1, 4), "right") == F(5, 16)
    assert side_limit(f_step, F(1, 2), "right") == F(7, 16)
    # boundary conventions used by the pseudo-inverse machinery
    assert side_limit(f_step, F(0), "left") == 0
    assert side_limit(f_step, F(1), "right") == 1


# -- pseudo-inverse ----------------------------------------------------------


def test_pseudo_inverse_half_jump(f_half_jump):
    g = pseudo_inverse(f_half_jump)
    assert eval_fn(g, F(1, 4)) == F(1, 2)
    assert eval_fn(g, F(2, 5)) == F(4, 5)
    assert eval_fn(g, F(1, 2)) == 1  # value in the gap: jump argument
    assert eval_fn(g, F(3, 4)) == 1
    assert eval_fn(g, F(1)) == 1


def test_pseudo_inverse_plateau(f_plateau):
    g = pseudo_inverse(f_plateau)
    assert eval_fn(g, F(0)) == 0
    assert eval_fn(g, F(1, 2)) == 0
    assert eval_fn(g, F(3, 4)) == F(3, 4)
    assert eval_fn(g, F(1)) == 1


def test_pseudo_inverse_matches_pointwise(f_step, f_gap):
    for f in (f_step, f_gap):
        g = pseudo_inverse(f)
        for y in grid(64):
            assert eval_fn(g, y) == pseudo_inverse_at(f, y)


def test_pseudo_inverse_composition_bounds(f_step):
    g = pseudo_inverse(f_step)
    for x in grid(32):
        assert eval_fn(g, eval_fn(f_step, x)) <= x


def test_strictly_increasing_inverse_roundtrip():
    rng = random.Random(7)
    for _ in range(20):
        f = random_strictly_increasing_fn(rng)
        g = pseudo_inverse(f)
        for x in grid(16):
            assert eval_fn(g, eval_fn(f, x)) == x


def test_right_continuous_triple_composition():
    rng = random.Random(8)
    for _ in range(20):
        f = random_nondecreasing_fn(rng)
        g = pseudo_inverse(f)
        for x in grid(16):
            v = eval_fn(f, x)
            assert eval_fn(f, eval_fn(g, v)) == v


def test_pseudo_inverse_against_bisection():
    rng = random.Random(9)
    for _ in range(15):
        f = random_nondecreasing_fn(rng)
        g = pseudo_inverse(f)
        for _ in range(40):
            y = F(rng.randint(0, 997), 997)
            assert eval_fn(g, y) == bisect_pseudo_inverse(f, y)


# -- range, plateau set, decomposition --------------------------------------


def test_range_golden(f_half_jump, f_gap, f_step, f_plateau):
    assert str(range_of(f_half_jump)) == "[0,1/2)∪{1}"
    assert str(range_of(f_gap)) == "[0,1/8)∪[3/16,1]"
    assert str(range_of(f_step)) == "[1/4,5/16]∪(7/16,1/2)∪{3/4}"
    assert str(range_of(f_plateau)) == "[1/2,1]"


def test_plateau_set(f_plateau, f_step, f_half_jump):
    assert str(plateau_set(f_plateau)) == "{1/2}"
    assert str(plateau_set(f_step)) == "{5/16}"
    assert plateau_set(f_half_jump).is_empty


def test_decompose_step(f_step):
    d = decompose(f_step)
    gaps = [(str(b), str(dd), str(c)) for b, dd, c in d.s]
    assert gaps == [("0", "1/4", "1/4"), ("5/16", "7/16", "5/16"),
                    ("1/2", "3/4", "3/4"), ("3/4", "1", "3/4")]
    assert sorted(d.c) == [F(1, 4), F(5, 16), F(3, 4)]
    assert str(d.q) == "{5/16}"
    assert d.f0plus == F(1, 4)
    assert d.k1 == (1, 2, 3)


def test_decompose_full_range(f_identity):
    d = decompose(f_identity)
    assert str(d.m) == "[0,1]"
    assert [(str(b), str(dd)) for b, dd, _ in d.s] == [("1", "1")]
    assert d.c == (F(1),)


def test_decompose_reconstruct_random():
    rng = random.Random(10)
    for _ in range(40):
        f = random_nondecreasing_fn(rng)
        d = decompose(f)
        assert d.reconstruct() == d.m
        for b, dd, c in d.s:
            assert d.m.contains(c)
            assert c == b or c == dd


# -- validation --------------------------------------------------------------


def test_rejects_gap_in_tiling():
    with pytest.raises(InvalidFunction):
        PiecewiseMonotoneFn(True, (
            Segment.linear(Interval.make(0, F(1, 2), True, False), F(1), F(0)),
            Segment.linear(Interval.make(F(3, 4), 1, True, True), F(1), F(0)),
        ), ())


def test_rejects_decreasing_values():
    with pytest.raises(ValueError):
        parse_fn("monotone: nondecreasing\n"
                 "segment [0,1/2] linear 1 0\n"
                 "segment (1/2,1] const 1/4\n")


def test_rejects_value_outside_unit():
    with pytest.raises(ValueError):
        parse_fn("monotone: nondecreasing\nsegment [0,1] linear 2 0\n")
