"""Acceptance criteria, one marker per criterion; the summary lines come from conftest."""
import math
import random
import time
from fractions import Fraction
from math import pi

import pytest

from orbitforge import chains, fricke, io, orbits, trigfields
from orbitforge.chains import ActionAngle, AngleVector, RationalAngle
from orbitforge.hyperbolic import elliptic_matrix, fixed_point_raw, rotation_angle_raw
from orbitforge.representation import (
    coords_from_rep,
    from_coords,
    twist_algebraic,
    twist_angle,
    twist_geometric,
)
from orbitforge.surface import Letter, TwistGen, generator_set, parse_word

from conftest import random_alpha, random_coords

TOL = 1e-6


def point(alpha, beta, gamma):
    return ActionAngle(beta, gamma, chains.degeneracy_mask(alpha, beta))


def vec(*items):
    return AngleVector(list(items))


# 1

WORKED_ALPHA = vec("12pi/7", "12pi/7", "10pi/7", "12pi/7")


@pytest.mark.criterion(1, "worked example: t(2,3) sends (pi, 3pi/4) to (2pi/3, pi)")
def test_worked_example():
    t0 = time.perf_counter()
    seed = point(WORKED_ALPHA, [pi], [3 * pi / 4])
    rep = from_coords(WORKED_ALPHA, seed)
    beta_prime = twist_angle(rep, TwistGen(2, 3))
    out = coords_from_rep(twist_algebraic(rep, TwistGen(2, 3)))
    elapsed = time.perf_counter() - t0
    assert abs(beta_prime - 4 * pi / 3) < TOL
    assert out.max_deviation(point(WORKED_ALPHA, [2 * pi / 3], [pi])) < TOL
    assert elapsed < 0.010


@pytest.mark.criterion(1, "worked example: t(2,3) sends (pi, 3pi/4) to (2pi/3, pi)")
def test_worked_example_geometric_path():
    seed = point(WORKED_ALPHA, [pi], [3 * pi / 4])
    out = twist_geometric(WORKED_ALPHA, seed, TwistGen(2, 3))
    assert out.max_deviation(point(WORKED_ALPHA, [2 * pi / 3], [pi])) < TOL


# 2

def _table_run(name):
    t = io.load_table(name)
    return t.alpha, t.seed


N4_RUNS = {
    "7pi/4 x4, pole": (vec("7pi/4", "7pi/4", "7pi/4", "7pi/4"), [3 * pi / 2], [None], 2),
    "7pi/4 x2, 5pi/3 x2, pole": (vec("7pi/4", "7pi/4", "5pi/3", "5pi/3"), [4 * pi / 3], [None], 2),
    "4pi/3, 3pi/2, 7pi/4 x2": (vec("4pi/3", "3pi/2", "7pi/4", "7pi/4"), [4 * pi / 3], [0.0], 3),
    "7pi/4 x3, pi": (vec("7pi/4", "7pi/4", "7pi/4", "pi"), [2 * pi / 3], [0.0], 4),
    "7pi/4 x3, 5pi/4": (vec("7pi/4", "7pi/4", "7pi/4", "5pi/4"), [2 * pi / 3], [pi / 3], 4),
    "12pi/7 x3, 10pi/7": (WORKED_ALPHA, [pi], [3 * pi / 4], 7),
    "4pi/3, 12pi/7 x3": (vec("4pi/3", "12pi/7", "12pi/7", "12pi/7"), [10 * pi / 7], [None], 18),
}

TABLE_RUNS = {"jester": 40, "jester_7pi4": 40, "hang_glider": 9, "sand_clock": 12, "bat": 105}


def _all_runs():
    runs = {}
    for name, size in TABLE_RUNS.items():
        a, s = _table_run(name)
        runs[name] = (a, s, size)
    for name, (a, b, g, size) in N4_RUNS.items():
        runs[name] = (a, point(a, b, g), size)
    return runs


RUNS = _all_runs()


@pytest.mark.criterion(2, "orbit sizes 40/40/9/12/105 and 2/3/4/4/7/18")
@pytest.mark.parametrize("name", sorted(RUNS))
def test_orbit_size(name):
    alpha, seed, size = RUNS[name]
    t0 = time.perf_counter()
    result = orbits.enumerate(alpha, seed, tol=1e-6, max_points=20000)
    assert time.perf_counter() - t0 < 5
    assert result.status is orbits.Status.FINITE
    assert len(result) == size


# 3

@pytest.mark.criterion(3, "table replay and bijection, rows as printed")
@pytest.mark.parametrize("name", ["hang_glider", "sand_clock", "bat", "jester"])
def test_table_replay(name):
    table = io.load_table(name)
    result = orbits.enumerate(table.alpha, table.seed)
    report = orbits.verify_against_table(result, table)
    assert report.ok, report.summary()


@pytest.mark.criterion(3, "table replay and bijection with recorded errata applied", supplementary=True)
@pytest.mark.parametrize("name", ["hang_glider", "sand_clock", "bat", "jester", "jester_7pi4"])
def test_table_replay_corrected(name):
    table = io.load_table(name).corrected()
    result = orbits.enumerate(table.alpha, table.seed)
    report = orbits.verify_against_table(result, table)
    assert report.ok, report.summary()
    assert report.rows == len(result)


# 4

def _exhausts(alpha, seed):
    t0 = time.perf_counter()
    result = orbits.enumerate(alpha, seed, max_points=20000)
    assert time.perf_counter() - t0 < 60
    return result.status is orbits.Status.EXHAUSTED and len(result) == 20000


@pytest.mark.criterion(4, "negative controls n=6 (12pi/7 x5, 10pi/7) and n=7 (12pi/7 x7) exhaust")
def test_negative_control_n6():
    alpha = vec(*(["12pi/7"] * 5 + ["10pi/7"]))
    assert _exhausts(alpha, chains.central_coords(alpha))


@pytest.mark.criterion(4, "negative controls n=6 (12pi/7 x5, 10pi/7) and n=7 (12pi/7 x7) exhaust")
def test_negative_control_n7():
    alpha = vec(*(["12pi/7"] * 7))
    assert _exhausts(alpha, chains.central_coords(alpha))


@pytest.mark.criterion(4, "valid negative controls exhaust: n=6 (7pi/4 x5, 5pi/3), n=7 (7pi/4 x7)",
                       supplementary=True)
@pytest.mark.parametrize("angles", [["7pi/4"] * 5 + ["5pi/3"], ["7pi/4"] * 7])
def test_negative_control_valid(angles):
    alpha = vec(*angles)
    assert _exhausts(alpha, chains.central_coords(alpha))


# 5

@pytest.mark.criterion(5, "geometric and algebraic twists agree on 1000 random cases")
def test_dual_path():
    rng = random.Random(5)
    worst = 0.0
    for _ in range(1000):
        n = rng.choice([4, 5, 6])
        alpha = random_alpha(rng, n)
        c = random_coords(rng, alpha)
        letter = Letter(rng.choice(generator_set(n)), rng.choice([1, -1]))
        alg = coords_from_rep(twist_algebraic(from_coords(alpha, c), letter))
        geo = twist_geometric(alpha, c, letter)
        worst = max(worst, alg.max_deviation(geo))
    assert worst < 1e-6


# 6

@pytest.mark.criterion(6, "invariants: product relation, beta order, slacks, areas, elliptic round trips")
@pytest.mark.parametrize("name", sorted(RUNS))
def test_orbit_invariants(name):
    alpha, seed, _ = RUNS[name]
    result = orbits.enumerate(alpha, seed)
    lam = chains.validate_alpha(alpha)
    base = from_coords(alpha, seed)
    for p in result.points:
        rep = base
        for letter in p.word:
            rep = twist_algebraic(rep, letter)
            assert rep.product_defect() < 1e-9
            assert all(abs(m[0] * m[3] - m[1] * m[2] - 1) < 1e-9 for m in rep.mats)
        b = p.coords.beta
        assert all(x < y for x, y in zip(b, b[1:]))
        assert min(chains.moment_polytope_check(alpha, b)) >= -1e-9
        areas = chains.triangle_areas(chains.build_chain(alpha, p.coords))
        assert abs(sum(areas) - lam / 2) < 1e-9


@pytest.mark.criterion(6, "invariants: product relation, beta order, slacks, areas, elliptic round trips")
def test_elliptic_round_trip():
    rng = random.Random(6)
    for _ in range(1000):
        x, y = rng.uniform(-5, 5), math.exp(rng.uniform(-2, 2))
        angle = rng.uniform(1e-3, 2 * pi - 1e-3)
        m = elliptic_matrix(x, y, angle)
        assert abs(fixed_point_raw(m) - complex(x, y)) < 1e-9 * max(1.0, abs(complex(x, y)))
        assert abs(rotation_angle_raw(m) - angle) < 1e-9


# 7

@pytest.mark.criterion(7, "regular orbit points only have beta in the fifteen-angle list")
@pytest.mark.parametrize("name", sorted(RUNS))
def test_beta_values(name):
    alpha, seed, _ = RUNS[name]
    result = orbits.enumerate(alpha, seed)
    assert orbits.beta_membership_check(result, max_den=7, tol=1e-6) == []


# 8

def _angles(*fracs):
    return {RationalAngle.from_fraction(Fraction(f)) for f in fracs}


ANGLE_SETS = {
    3: _angles("2/3", "1", "4/3"),
    4: _angles("1/2", "2/3", "1", "4/3", "3/2"),
    5: _angles("2/5", "2/3", "4/5", "1", "6/5", "4/3", "8/5"),
    7: _angles("2/7", "4/7", "2/3", "6/7", "1", "8/7", "4/3", "10/7", "12/7"),
    9: _angles("2/9", "4/9", "2/3", "8/9", "1", "10/9", "4/3", "14/9", "16/9"),
    18: {RationalAngle(k, 9) for k in range(1, 18)},
}


@pytest.mark.criterion(8, "rational angle lists for N = 3, 4, 5, 7, 9, 18")
@pytest.mark.parametrize("N", sorted(ANGLE_SETS))
def test_rational_angle_lists(N):
    t0 = time.perf_counter()
    got = trigfields.list_angles(N)
    assert time.perf_counter() - t0 < 1
    assert set(got) == ANGLE_SETS[N]
    assert len(got) == len(ANGLE_SETS[N])


# 9

@pytest.mark.criterion(9, "Fricke coefficients, Okamoto invariance, real form test, angle recovery")
def test_fricke_zero():
    assert tuple(fricke.fricke_coeffs((0, 0, 0, 0))) == (0, 0, 0, 4)


@pytest.mark.criterion(9, "Fricke coefficients, Okamoto invariance, real form test, angle recovery")
def test_okamoto_invariance():
    rng = random.Random(9)
    for _ in range(100):
        th = [rng.uniform(-2, 2) for _ in range(4)]
        f0 = fricke.fricke_coeffs(fricke.traces(th))
        for image in (fricke.okamoto(th), fricke.okamoto_tilde(th)):
            assert f0.max_deviation(fricke.fricke_coeffs(fricke.traces(image))) < 1e-9


FIVE_N4 = {
    "12pi/7 x3, 10pi/7": vec("10pi/7", "12pi/7", "12pi/7", "12pi/7"),
    "4pi/3, 12pi/7 x3": vec("4pi/3", "12pi/7", "12pi/7", "12pi/7"),
    "11pi/6 x4": vec("11pi/6", "11pi/6", "11pi/6", "11pi/6"),
    "7pi/4 x4": vec("7pi/4", "7pi/4", "7pi/4", "7pi/4"),
    "7pi/4 x3, pi": vec("pi", "7pi/4", "7pi/4", "7pi/4"),
}


@pytest.mark.criterion(9, "Fricke coefficients, Okamoto invariance, real form test, angle recovery")
@pytest.mark.parametrize("name", sorted(FIVE_N4))
def test_real_form_of_finite_orbit_vectors(name):
    t = fricke.traces_from_alpha(FIVE_N4[name])
    assert fricke.benedetto_goldman(t) is fricke.RealForm.SL2R


@pytest.mark.criterion(9, "Fricke coefficients, Okamoto invariance, real form test, angle recovery")
def test_angle_vector_recovery():
    rng = random.Random(99)
    done = 0
    while done < 200:
        t = [rng.uniform(-2, 2) for _ in range(4)]
        if fricke.benedetto_goldman(t) is not fricke.RealForm.SL2R:
            continue
        a = fricke.angle_vector_from_traces(t)
        assert sum(a) > 6 * pi
        assert all(0 < x < 2 * pi for x in a)
        back = fricke.traces_from_alpha(a)
        assert sorted(abs(x) for x in back) == pytest.approx(sorted(abs(x) for x in t), abs=1e-9)
        assert math.copysign(1, math.prod(back)) == math.copysign(1, math.prod(t))
        done += 1


# 10

@pytest.mark.criterion(10, "discrete triangle rows: (2,3,7), (3,7/2,7), (7/2,8,8) yes; (2,5/2,6) no")
def test_felikson_rows():
    F = Fraction
    assert trigfields.is_discrete_triangle(2, 3, 7)
    assert trigfields.is_discrete_triangle(3, F(7, 2), 7)
    assert trigfields.is_discrete_triangle(F(7, 2), 8, 8)
    assert trigfields.is_discrete_triangle(2, F(5, 2), 6, strict=False) is False
