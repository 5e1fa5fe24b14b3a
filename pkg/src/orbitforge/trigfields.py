"""Rational angles whose half-angle cosines lie in Q(cos(pi/N)), and triangle-group discreteness."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chains import RationalAngle


class FieldError(ValueError):
    pass


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class FieldSpec:
    """K = Q(cos(pi/N)); N=3 stands for Q."""

    N: int

    def __post_init__(self):
        if self.N < 3:
            raise FieldError(f"N must be at least 3, got {self.N}")


@dataclass(frozen=True, order=True)
class CosValue:
    """2cos(2 pi p/q), with p/q reduced and reflected into [0, 1/2]."""

    p: int
    q: int = 1

    def __post_init__(self):
        if self.q <= 0:
            raise FieldError("q must be positive")
        f = Fraction(self.p, self.q) % 1
        if f > Fraction(1, 2):
            f = 1 - f
        object.__setattr__(self, "p", f.numerator)
        object.__setattr__(self, "q", f.denominator)

    @classmethod
    def from_angle(cls, r: RationalAngle) -> "CosValue":
        """The value 2cos(r/2)."""
        return cls.from_fraction(r.fraction / 4)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "CosValue":
        return cls(f.numerator, f.denominator)

    @property
    def value(self) -> float:
        return 2 * math.cos(2 * math.pi * self.p / self.q)

    @property
    def degree(self) -> int:
        """Degree of the value over Q."""
        return 1 if self.q <= 2 else totient(self.q) // 2

    def doubled(self) -> "CosValue":
        # f(x) = x^2 - 2 doubles the angle
        return CosValue(2 * self.p, self.q)

    def __str__(self) -> str:
        return f"2cos(2pi*{self.p}/{self.q})"


def _spec(spec) -> FieldSpec:
    return spec if isinstance(spec, FieldSpec) else FieldSpec(int(spec))


def field_degree(spec) -> int:
    return totient(2 * _spec(spec).N) // 2


def member(x: CosValue, spec) -> bool:
    """Exact test of 2cos(2 pi p/q) in Q(cos(pi/N)).

    Inside Q(zeta_L), L = lcm(q, 2N), the value is zeta^t + zeta^-t with
    t = pL/q. The field is fixed by the automorphisms zeta -> zeta^k with
    k = +-1 mod 2N, so the value belongs to it iff each such k sends t to +-t.
    """
    two_n = 2 * _spec(spec).N
    L = math.lcm(x.q, two_n)
    t = x.p * L // x.q
    for k in range(1, L):
        if math.gcd(k, L) != 1 or k % two_n not in (1, two_n - 1):
            continue
        if (k * t - t) % L and (k * t + t) % L:
            return False
    return True


def _candidate_denominators(bound: int):
    # phi(q) >= sqrt(q/2), so phi(q) <= bound forces q <= 2 bound^2
    return [q for q in range(1, 2 * bound * bound + 1) if totient(q) <= bound]


def list_angles(spec) -> list:
    """All r in (0, 2pi) with r/pi rational and 2cos(r/2) in the field, sorted."""
    spec = _spec(spec)
    out = set()
    for q in _candidate_denominators(2 * field_degree(spec)):
        for p in range(1, q):
            f = Fraction(p, q)
            if f.denominator != q or f >= Fraction(1, 2):
                continue
            if member(CosValue(p, q), spec):
                out.add(RationalAngle.from_fraction(4 * f))
    return sorted(out, key=lambda r: r.fraction)


@dataclass(frozen=True)
class OrbitStep:
    value: CosValue
    member: bool


def preper_orbit(x: CosValue, spec) -> list:
    """Forward trajectory under x -> x^2 - 2, ending at the first repeated value."""
    seen = set()
    steps = []
    while x not in seen:
        seen.add(x)
        steps.append(OrbitStep(x, member(x, spec)))
        x = x.doubled()
    steps.append(OrbitStep(x, member(x, spec)))
    return steps


def intersection_N(a: int, b: int) -> int:
    """N with Q(cos(pi/a)) and Q(cos(pi/b)) meeting in Q(cos(pi/N))."""
    if a < 3 or b < 3:
        raise FieldError("both arguments must be at least 3")
    return max(math.gcd(a, b), 3)


# possible beta values on regular points of finite orbits
ADMISSIBLE_BETAS = frozenset(
    [RationalAngle(2, 3), RationalAngle(1), RationalAngle(4, 3), RationalAngle(1, 2), RationalAngle(3, 2)]
    + [RationalAngle(2 * k, 5) for k in range(1, 5)]
    + [RationalAngle(2 * k, 7) for k in range(1, 7)]
)


def recognize_rational_angle(x: float, max_den: int = 12, tol: float = 1e-9) -> Optional[RationalAngle]:
    """p pi/q within tol of x with q <= max_den, or None."""
    f = Fraction(x / math.pi).limit_denominator(max_den)
    if abs(x - f.numerator * math.pi / f.denominator) < tol:
        return RationalAngle.from_fraction(f)
    return None


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def _rows(p: Fraction, q: Fraction, r: Fraction) -> bool:
    """Does the ordered triple match one of the discrete rows?"""
    if _is_int(p) and _is_int(q) and _is_int(r):
        return True
    if q == r and _is_int(q) and _is_int(2 * p):
        a, b = 2 * p, q
        if Fraction(1, a.numerator) + Fraction(1, b.numerator) < Fraction(1, 2):
            return True
    if _is_int(r) and r >= 7:
        a = r
        if p == 2 and q == a / 2:
            return True
        if q == a and (p == a / 2 or p == a / 4):
            return True
        if p == 3 and q == a / 3:
            return True
    if p == q == r and _is_int(2 * p) and 2 * p >= 7:
        return True
    return (p, q, r) == (3, Fraction(7, 2), 7)


def is_discrete_triangle(p, q, r, strict: bool = True) -> bool:
    """Whether the rotation group of the (pi/p, pi/q, pi/r) triangle is discrete.

    A triple with 1/p + 1/q + 1/r >= 1 is not hyperbolic; it raises when
    strict, otherwise it is reported as not discrete.
    """
    t = [Fraction(v) for v in (p, q, r)]
    if min(t) <= 0:
        raise FieldError("entries must be positive")
    if sum(1 / v for v in t) >= 1:
        if strict:
            raise FieldError(f"({p}, {q}, {r}) is not hyperbolic")
        return False
    return any(_rows(*perm) for perm in itertools.permutations(t))
