"""Upper half-plane points and PSL(2,R) isometries.

Elliptic elements are built and read back with closed-form formulas so
that every quantity in a triangle chain stays explicit.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

TWO_PI = 2.0 * math.pi
ANGLE_TOL = 1e-9
DET_TOL = 1e-12
BRANCH_GUARD = 1e-12


class GeometryError(ValueError):
    """Raised when an input falls outside the domain of a geometric routine."""


class ClassificationError(GeometryError):
    pass


@dataclass(frozen=True, slots=True)
class HPoint:
    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise GeometryError(f"point not in upper half-plane: y={self.y}")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @classmethod
    def from_complex(cls, z: complex) -> "HPoint":
        return cls(z.real, z.imag)


class IsometryClass(Enum):
    IDENTITY = "Identity"
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"


def _canonical(a, b, c, d):
    # first entry that is clearly nonzero decides the sign
    for v in (a, b, c, d):
        if abs(v) > 1e-15:
            if v < 0:
                return -a, -b, -c, -d
            break
    return a, b, c, d


@dataclass(frozen=True, slots=True)
class Isometry:
    """Element of PSL(2,R) stored with a canonical sign."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > 1e-6:
            raise GeometryError(f"determinant {det} is not 1")
        a, b, c, d = _canonical(self.a, self.b, self.c, self.d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def normalized(cls, a, b, c, d) -> "Isometry":
        det = a * d - b * c
        if det <= 0:
            raise GeometryError(f"matrix with determinant {det} is not in SL(2,R)")
        s = math.sqrt(det)
        return cls(a / s, b / s, c / s, d / s)

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def entries(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> float:
        return self.a + self.d

    def inverse(self) -> "Isometry":
        return Isometry(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return compose(self, other)

    def isclose(self, other: "Isometry", tol: float = ANGLE_TOL) -> bool:
        same = max(abs(u - v) for u, v in zip(self.entries, other.entries))
        flip = max(abs(u + v) for u, v in zip(self.entries, other.entries))
        return min(same, flip) < tol

    def classify(self, tol: float = ANGLE_TOL) -> IsometryClass:
        t = abs(self.trace)
        if t < 2.0 - tol:
            return IsometryClass.ELLIPTIC
        if t > 2.0 + tol:
            return IsometryClass.HYPERBOLIC
        if self.isclose(Isometry.identity(), tol):
            return IsometryClass.IDENTITY
        return IsometryClass.PARABOLIC


def mat_mul(m, n):
    """Product of two 2x2 matrices given as 4-tuples (a, b, c, d)."""
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_renorm(m):
    a, b, c, d = m
    s = math.sqrt(a * d - b * c)
    return (a / s, b / s, c / s, d / s)


def mat_inv(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def compose(g: Isometry, h: Isometry) -> Isometry:
    """Matrix product g h, renormalized to determinant one."""
    return Isometry.normalized(*mat_mul(g.entries, h.entries))


def apply(g: Isometry, p: HPoint) -> HPoint:
    z = p.z
    w = (g.a * z + g.b) / (g.c * z + g.d)
    return HPoint(w.real, w.imag)


def elliptic_matrix(x: float, y: float, angle: float):
    """Raw 4-tuple of the counterclockwise rotation by `angle` about x + iy."""
    s = math.sin(angle / 2.0)
    co = math.cos(angle / 2.0)
    return (co - x / y * s, (x * x / y + y) * s, -s / y, co + x / y * s)


def elliptic_from(p: HPoint, angle: float) -> Isometry:
    if not 0.0 < angle < TWO_PI:
        raise GeometryError(f"rotation angle {angle} outside (0, 2pi)")
    return Isometry(*elliptic_matrix(p.x, p.y, angle))


def rotation_angle_raw(m) -> float:
    a, b, c, d = m
    t = a + d
    t2 = t * t
    if t2 >= 4.0:
        raise ClassificationError(f"trace {t} is not elliptic")
    if c == 0.0:
        raise GeometryError("lower-left entry is zero")
    sgn = -1.0 if c > 0 else 1.0  # -c/|c|
    if abs(t2 - 2.0) <= BRANCH_GUARD:
        # tan blows up; the angle is pi/2 or 3pi/2
        return math.pi / 2 if sgn * t > 0 else 3 * math.pi / 2
    base = math.atan(sgn * t / (t2 - 2.0) * math.sqrt(4.0 - t2))
    if t2 < 2.0:
        return base + math.pi
    if t * sgn > 0:
        return base
    return base + TWO_PI


def rotation_angle(g: Isometry) -> float:
    """Counterclockwise rotation angle in (0, 2pi) of an elliptic element."""
    return rotation_angle_raw(g.entries)


def fixed_point_raw(m) -> complex:
    a, b, c, d = m
    t = a + d
    if t * t >= 4.0:
        raise ClassificationError(f"trace {t} is not elliptic")
    if c == 0.0:
        raise GeometryError("lower-left entry is zero")
    return complex((a - d) / (2 * c), math.sqrt(4.0 - t * t) / (2 * abs(c)))


def fixed_point(g: Isometry) -> HPoint:
    return HPoint.from_complex(fixed_point_raw(g.entries))


def distance_raw(z: complex, w: complex) -> float:
    num = abs(z - w) ** 2
    return math.acosh(1.0 + num / (2.0 * z.imag * w.imag))


def distance(p: HPoint, q: HPoint) -> float:
    return distance_raw(p.z, q.z)


def side_from_angles(A: float, B: float, C: float) -> float:
    """Length of the side opposite C in a triangle with angles A, B, C."""
    if A + B + C >= math.pi:
        raise GeometryError(f"angle sum {A + B + C} is not hyperbolic")
    ch = (math.cos(A) * math.cos(B) + math.cos(C)) / (math.sin(A) * math.sin(B))
    return math.acosh(max(ch, 1.0))


def third_angle(A: float, B: float, side: float) -> float:
    """Angle opposite `side` given the two angles adjacent to it."""
    cosc = -math.cos(A) * math.cos(B) + math.sin(A) * math.sin(B) * math.cosh(side)
    return math.acos(min(1.0, max(-1.0, cosc)))


# Local polar frames. At a point P the direction pointing straight up has
# angle 0 and angles grow counterclockwise.

def direction(p: complex, q: complex) -> float:
    """Angle of the geodesic ray from p towards q in the local frame at p."""
    u = complex((q.real - p.real) / p.imag, q.imag / p.imag)
    w = (u - 1j) / (u + 1j)
    return math.atan2(w.imag, w.real)


def shoot(p: complex, angle: float, dist: float) -> complex:
    """Point at distance `dist` from p along the ray with local angle `angle`."""
    w = math.tanh(dist / 2.0) * cmath.exp(1j * angle)
    u = 1j * (1 + w) / (1 - w)
    return complex(p.real + p.imag * u.real, p.imag * u.imag)


def to_disk(z: complex) -> complex:
    """Cayley map from the half-plane to the unit disk, sending i to 0."""
    return (z - 1j) / (z + 1j)


def wrap(angle: float) -> float:
    """Reduce an angle into [0, 2pi)."""
    r = math.fmod(angle, TWO_PI)
    if r < 0:
        r += TWO_PI
    if r >= TWO_PI:
        r -= TWO_PI
    return r


def circ_dist(a: float, b: float) -> float:
    d = abs(wrap(a - b))
    return min(d, TWO_PI - d)
