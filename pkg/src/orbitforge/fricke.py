"""Fricke coefficients, Okamoto transformations and the SL2R/SU2 test for four punctures."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .chains import AngleVector, RationalAngle
from .trigfields import recognize_rational_angle

TWO_PI = 2 * math.pi


class FrickeError(ValueError):
    pass


class RealForm(str, Enum):
    SL2R = "SL2R"
    SU2 = "SU2"


@dataclass(frozen=True)
class FrickeCoeffs:
    A: float
    B: float
    C: float
    D: float

    def __iter__(self):
        return iter((self.A, self.B, self.C, self.D))

    def max_deviation(self, other: "FrickeCoeffs") -> float:
        return max(abs(u - v) for u, v in zip(self, other))


def fricke_coeffs(t: Sequence[float]) -> FrickeCoeffs:
    a, b, c, d = t
    return FrickeCoeffs(a * b + c * d, b * c + a * d, a * c + b * d,
                        4 - a * a - b * b - c * c - d * d - a * b * c * d)


def fricke_residual(X: float, Y: float, Z: float, F: FrickeCoeffs) -> float:
    return X * X + Y * Y + Z * Z + X * Y * Z - F.A * X - F.B * Y - F.C * Z - F.D


# theta quadruples: traces are 2cos(pi theta)

def _theta(th) -> tuple:
    if len(th) != 4:
        raise FrickeError(f"expected four entries, got {len(th)}")
    return tuple(Fraction(v) if not isinstance(v, float) else v for v in th)


def okamoto(th: Sequence) -> tuple:
    a, b, c, d = _theta(th)
    s = a + b + c + d
    return tuple(x - s / 2 + 1 for x in (a, b, c, d))


def okamoto_tilde(th: Sequence) -> tuple:
    a, b, c, d = _theta(th)
    return ((a - b - c + d) / 2, (-a + b - c + d) / 2, (-a - b + c + d) / 2, (a + b + c + d) / 2)


def traces(th: Sequence) -> tuple:
    return tuple(2 * math.cos(math.pi * float(x)) for x in th)


def _key(t, digits=12):
    return tuple(round(x, digits) + 0.0 for x in t)


def quad_variants(th: Sequence) -> list:
    """Trace quadruples from theta, Ok(theta) and Ok~(theta), closed under
    permutations and a global sign change; entries outside (-2, 2) are dropped."""
    seen = {}
    for base in (th, okamoto(th), okamoto_tilde(th)):
        t = traces(base)
        for perm in itertools.permutations(t):
            for sign in (1, -1):
                q = tuple(sign * x for x in perm)
                if all(abs(x) < 2 - 1e-12 for x in q):
                    seen.setdefault(_key(q), q)
    return [seen[k] for k in sorted(seen)]


def _check_interior(t: Sequence[float]) -> None:
    if len(t) != 4:
        raise FrickeError(f"expected four traces, got {len(t)}")
    for x in t:
        if not abs(x) < 2:
            raise FrickeError(f"trace {x} is not in (-2, 2)")


def benedetto_goldman(t: Sequence[float]) -> RealForm:
    _check_interior(t)
    a, b, c, d = t
    lhs = 2 * (a * a + b * b + c * c + d * d) - a * b * c * d - 16
    rhs = math.sqrt((4 - a * a) * (4 - b * b) * (4 - c * c) * (4 - d * d))
    return RealForm.SL2R if lhs > rhs else RealForm.SU2


def angle_vector_from_traces(t: Sequence[float], exact_den: int = 0, tol: float = 1e-9):
    """The angle vector, sorted decreasingly, of the DT component carrying these traces.

    Returns floats, or an AngleVector when exact_den > 0 and every angle is
    recognized as p pi/q with q <= exact_den.
    """
    if benedetto_goldman(t) is not RealForm.SL2R:
        raise FrickeError("traces give SU(2) representations")
    bar = []
    for x in t:
        th = 2 * math.acos(x / 2)
        bar.append(max(th, TWO_PI - th))
    bar.sort(reverse=True)
    prod = t[0] * t[1] * t[2] * t[3]
    if abs(bar[3] - math.pi) > 1e-12 and prod > 0:
        bar[3] = TWO_PI - bar[3]
    if exact_den > 0:
        rec = [recognize_rational_angle(x, exact_den, tol) for x in bar]
        if all(r is not None for r in rec):
            return AngleVector(rec)
    return tuple(bar)


def traces_from_alpha(alpha) -> tuple:
    """A trace quadruple mapped to alpha; inverse of angle_vector_from_traces up to order and sign."""
    a = [float(x) for x in (alpha.radians if isinstance(alpha, AngleVector) else alpha)]
    if len(a) != 4:
        raise FrickeError("four angles required")
    t = [2 * math.cos(x / 2) for x in a]
    want_negative = min(a) >= math.pi
    prod = t[0] * t[1] * t[2] * t[3]
    if prod != 0 and (prod < 0) != want_negative:
        k = min(range(4), key=lambda i: a[i])
        t[k] = -t[k]
    return tuple(t)


@dataclass
class ScanHit:
    name: str
    theta: tuple
    traces: tuple
    fricke: FrickeCoeffs
    alpha: object


def scan_thetas(entries: Iterable) -> list:
    """Run each theta through Ok/Ok~, keep SL2R quadruples, and report their angle vectors.

    Only the three base quadruples are used, as permuting entries or flipping
    every sign only permutes the resulting angle vector.
    """
    hits = []
    for k, e in enumerate(entries):
        if isinstance(e, dict):
            name, th = e.get("name", str(k)), e["theta"]
        else:
            name, th = str(k), e
        th = tuple(Fraction(str(v)) for v in th)
        found = set()
        for base in (th, okamoto(th), okamoto_tilde(th)):
            t = traces(base)
            if not all(abs(x) < 2 - 1e-12 for x in t):
                continue
            if benedetto_goldman(t) is not RealForm.SL2R:
                continue
            alpha = angle_vector_from_traces(t, exact_den=120)
            key = str(alpha) if isinstance(alpha, AngleVector) else _key(alpha, 9)
            if key in found:
                continue
            found.add(key)
            hits.append(ScanHit(name, base, t, fricke_coeffs(t), alpha))
    return hits
