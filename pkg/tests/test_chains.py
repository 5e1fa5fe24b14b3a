import math
import random
from fractions import Fraction
from math import pi

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitforge import chains
from orbitforge.chains import (
    ActionAngle,
    AngleVector,
    NotDTError,
    RationalAngle,
    parse_angle,
)

from conftest import random_alpha, random_coords


@pytest.mark.parametrize("text, value", [
    ("12pi/7", RationalAngle(12, 7)), ("pi", RationalAngle(1)), ("3pi", RationalAngle(3)),
    (" 10 pi / 14 ", RationalAngle(5, 7)), ("-pi/2", RationalAngle(-1, 2)),
])
def test_parse_exact(text, value):
    assert parse_angle(text) == value


def test_parse_decimal():
    assert parse_angle("1.25") == 1.25


def test_rational_angle_str():
    assert str(RationalAngle(24, 14)) == "12pi/7"
    assert str(RationalAngle(1)) == "pi"


def test_alpha_must_be_exact():
    with pytest.raises(ValueError):
        AngleVector([5.0, 5.0, 5.0, 5.0])
    with pytest.raises(ValueError):
        AngleVector(["2pi", "pi", "pi", "pi"])


def test_excess():
    a = AngleVector(["12pi/7", "12pi/7", "10pi/7", "12pi/7"])
    assert a.excess == Fraction(4, 7)
    assert chains.validate_alpha(a) == pytest.approx(4 * pi / 7)


@pytest.mark.parametrize("angles", [["12pi/7"] * 5 + ["10pi/7"], ["12pi/7"] * 7, ["pi"] * 4, ["5pi/3"] * 3])
def test_not_dt(angles):
    with pytest.raises(NotDTError):
        chains.validate_alpha(AngleVector(angles))


def test_polytope_slacks_sum_to_lambda():
    a = AngleVector(["7pi/4"] * 6)
    beta = [2 * pi / 3, pi, 4 * pi / 3]
    s = chains.moment_polytope_check(a, beta)
    assert len(s) == 4
    assert sum(s) == pytest.approx(chains.validate_alpha(a))


def test_worked_example_triangle_angles():
    # (pi/7, pi/7, pi/2) and (pi/2, 2pi/7, pi/7)
    a = AngleVector(["12pi/7", "12pi/7", "10pi/7", "12pi/7"]).radians
    t1 = chains.triangle_angles(a, [pi], 1)
    t2 = chains.triangle_angles(a, [pi], 2)
    assert sorted(t1) == pytest.approx(sorted([pi / 7, pi / 7, pi / 2]))
    assert sorted(t2) == pytest.approx(sorted([pi / 2, 2 * pi / 7, pi / 7]))


def test_degenerate_mask_on_polytope_face():
    a = AngleVector(["7pi/4"] * 4)
    c = ActionAngle([3 * pi / 2], [None], chains.degeneracy_mask(a, [3 * pi / 2]))
    assert any(c.degenerate)
    assert not c.regular


def test_chain_builds_through_degenerate_triangle():
    a = AngleVector(["7pi/4"] * 4)
    mask = chains.degeneracy_mask(a, [3 * pi / 2])
    chain = chains.build_chain(a, ActionAngle([3 * pi / 2], [None], mask))
    back = chains.extract_coords(chain, a)
    assert back.beta == pytest.approx((3 * pi / 2,))


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 7), st.integers(0, 10 ** 6))
def test_chain_round_trip(n, seed):
    rng = random.Random(seed)
    a = random_alpha(rng, n)
    c = random_coords(rng, a)
    chain = chains.build_chain(a, c)
    assert chains.extract_coords(chain, a).max_deviation(c) < 1e-8


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 7), st.integers(0, 10 ** 6))
def test_area_is_half_lambda(n, seed):
    rng = random.Random(seed)
    a = random_alpha(rng, n)
    chain = chains.build_chain(a, random_coords(rng, a))
    assert sum(chains.triangle_areas(chain)) == pytest.approx(chains.validate_alpha(a) / 2, abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 7), st.integers(0, 10 ** 6))
def test_triangles_are_clockwise(n, seed):
    rng = random.Random(seed)
    a = random_alpha(rng, n)
    chain = chains.build_chain(a, random_coords(rng, a))
    for k in range(1, n - 1):
        p, q, r = (v.z for v in chain.triangle(k))
        assert chains.signed_orientation(p, q, r) < 0


def test_central_coords_are_inside():
    for angles in (["7pi/4"] * 7, ["12pi/7"] * 5 + ["11pi/7"]):
        a = AngleVector(angles)
        c = chains.central_coords(a)
        s = chains.moment_polytope_check(a, c.beta)
        assert min(s) > 0
        assert max(s) - min(s) < 1e-12


def test_max_deviation_is_circular_in_gamma():
    a = ActionAngle([1.0], [0.0], [False, False])
    b = ActionAngle([1.0], [2 * pi - 1e-9], [False, False])
    assert a.max_deviation(b) < 1e-8


def test_max_deviation_infinite_for_other_face():
    a = ActionAngle([1.0], [0.0], [False, False])
    b = ActionAngle([1.0], [None], [True, False])
    assert math.isinf(a.max_deviation(b))
