"""Triangle chains and their action-angle coordinates."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .hyperbolic import (
    TWO_PI,
    GeometryError,
    HPoint,
    direction,
    distance_raw,
    shoot,
    side_from_angles,
    third_angle,
    wrap,
)

PI = math.pi
DEG_TOL = 1e-8  # slack below this marks a degenerate triangle
POINT_TOL = 1e-7


class ChainError(GeometryError):
    pass


class NotDTError(ChainError):
    pass


@dataclass(frozen=True, order=True)
class RationalAngle:
    """The angle num*pi/den, kept reduced."""

    num: int
    den: int = 1

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        f = Fraction(self.num, self.den)
        object.__setattr__(self, "num", f.numerator)
        object.__setattr__(self, "den", f.denominator)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RationalAngle":
        return cls(f.numerator, f.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def radians(self) -> float:
        return self.num * PI / self.den

    def __float__(self) -> float:
        return self.radians

    def in_open_circle(self) -> bool:
        return 0 < self.fraction < 2

    def __str__(self) -> str:
        if self.num == 0:
            return "0"
        head = "pi" if self.num == 1 else ("-pi" if self.num == -1 else f"{self.num}pi")
        return head if self.den == 1 else f"{head}/{self.den}"


_ANGLE = re.compile(r"^\s*(-?\d*)\s*pi\s*(?:/\s*(\d+))?\s*$")


def parse_angle(text: str):
    """Parse ``12pi/7``, ``pi``, ``3pi`` or a decimal.

    Exact forms give a RationalAngle, decimals give a float.
    """
    m = _ANGLE.match(text)
    if m:
        head = m.group(1)
        num = 1 if head in ("", None) else (-1 if head == "-" else int(head))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return RationalAngle(num, den)
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"cannot parse angle {text!r}") from None


def as_radians(x) -> float:
    return x.radians if isinstance(x, RationalAngle) else float(x)


@dataclass(frozen=True)
class AngleVector:
    entries: tuple

    def __init__(self, entries: Sequence):
        ents = []
        for e in entries:
            if isinstance(e, str):
                e = parse_angle(e)
            if not isinstance(e, RationalAngle):
                raise ValueError(f"peripheral angles must be exact, got {e!r}")
            if not e.in_open_circle():
                raise ValueError(f"angle {e} outside (0, 2pi)")
            ents.append(e)
        object.__setattr__(self, "entries", tuple(ents))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def radians(self) -> tuple:
        return tuple(e.radians for e in self.entries)

    @property
    def excess(self) -> Fraction:
        """lambda / pi, exactly."""
        return sum((e.fraction for e in self.entries), Fraction(0)) - 2 * (self.n - 1)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return ",".join(str(e) for e in self.entries)


@dataclass(frozen=True)
class ActionAngle:
    beta: tuple
    gamma: tuple
    degenerate: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(float(b) for b in self.beta))
        object.__setattr__(self, "gamma", tuple(None if g is None else float(g) for g in self.gamma))
        object.__setattr__(self, "degenerate", tuple(bool(d) for d in self.degenerate))

    @property
    def regular(self) -> bool:
        return not any(self.degenerate)

    def max_deviation(self, other: "ActionAngle") -> float:
        """Largest coordinate difference, gamma compared on the circle.

        Returns inf if the degeneracy patterns differ.
        """
        if self.degenerate != other.degenerate or len(self.beta) != len(other.beta):
            return math.inf
        dev = max((abs(a - b) for a, b in zip(self.beta, other.beta)), default=0.0)
        for g, h in zip(self.gamma, other.gamma):
            if (g is None) != (h is None):
                return math.inf
            if g is not None:
                d = abs(wrap(g - h))
                dev = max(dev, min(d, TWO_PI - d))
        return dev

    def __str__(self):
        fmt = lambda v: "-" if v is None else f"{v:.9f}"
        return f"beta=({', '.join(map(fmt, self.beta))}) gamma=({', '.join(map(fmt, self.gamma))})"


@dataclass(frozen=True)
class TriangleChain:
    """Exterior vertices C_1..C_n and shared vertices B_1..B_{n-3}."""

    exterior: tuple
    shared: tuple

    @property
    def n(self) -> int:
        return len(self.exterior)

    def triangle(self, k: int):
        """Vertices of T_k (1-based) as HPoints in chain order."""
        return tuple(HPoint.from_complex(z) for z in _tri_points(
            [p.z for p in self.exterior], [p.z for p in self.shared], k))


def _alpha_rad(alpha) -> tuple:
    return alpha.radians if isinstance(alpha, AngleVector) else tuple(float(a) for a in alpha)


def validate_alpha(alpha: AngleVector) -> float:
    """Return lambda = sum(alpha) - 2pi(n-1), raising if it is not positive."""
    if alpha.n < 4:
        raise NotDTError(f"need at least 4 punctures, got {alpha.n}")
    if alpha.excess <= 0:
        raise NotDTError(f"sum of angles does not exceed 2pi(n-1): lambda = {alpha.excess}pi")
    return float(alpha.excess) * PI


def moment_polytope_check(alpha, beta: Sequence[float]) -> list:
    """Slacks of the n-2 inequalities, one per triangle; negative means violated."""
    a = _alpha_rad(alpha)
    n = len(a)
    if len(beta) != n - 3:
        raise ValueError(f"expected {n - 3} beta values, got {len(beta)}")
    out = [beta[0] - (4 * PI - a[0] - a[1])]
    for i in range(n - 4):
        out.append(beta[i + 1] - beta[i] - (2 * PI - a[i + 2]))
    out.append(a[n - 2] + a[n - 1] - 2 * PI - beta[n - 4])
    return out


def degeneracy_mask(alpha, beta, tol: float = DEG_TOL) -> tuple:
    return tuple(s < tol for s in moment_polytope_check(alpha, beta))


def triangle_angles(a: Sequence[float], beta: Sequence[float], k: int) -> tuple:
    """Interior angles of T_k at (first, exterior C_{k+1}, last) vertex."""
    n = len(a)
    first = PI - a[0] / 2 if k == 1 else beta[k - 2] / 2
    mid = PI - a[k] / 2
    last = PI - beta[k - 1] / 2 if k < n - 2 else PI - a[n - 1] / 2
    return first, mid, last


def _tri_points(C, B, k):
    n = len(C)
    first = C[0] if k == 1 else B[k - 2]
    last = B[k - 1] if k < n - 2 else C[n - 1]
    return first, C[k], last


def junctions(mask: Sequence[bool]) -> list:
    """Pairs (a, b) of consecutive non-degenerate triangles (1-based).

    The angle at the junction is stored as gamma_{b-1}.
    """
    nd = [k + 1 for k, d in enumerate(mask) if not d]
    return list(zip(nd, nd[1:]))


def gammas_from_points(C, B, mask) -> tuple:
    """Angle coordinates read off from complex vertex positions.

    At a junction P between T_a and T_b the value is the counterclockwise
    angle from the ray P->C_{b+1} to the ray P->C_{a+1}.
    """
    n = len(C)
    out = [None] * (n - 3)
    for a, b in junctions(mask):
        p = B[a - 1]
        out[b - 2] = wrap(direction(p, C[a]) - direction(p, C[b]))
    return tuple(out)


def build_points(a: Sequence[float], beta: Sequence[float], gamma: Sequence, mask: Sequence[bool]):
    """Vertex positions (complex) of the chain in canonical placement."""
    n = len(a)
    C = [0j] * n
    B = [0j] * (n - 3)
    p = 1j
    C[0] = p
    prev = None
    for k in range(1, n - 1):
        if mask[k - 1]:
            C[k] = p
            last = p
        else:
            A0, A1, A2 = triangle_angles(a, beta, k)
            if prev is None:
                d = 0.0
            else:
                g = gamma[k - 2]
                if g is None:
                    raise ChainError(f"gamma_{k - 1} required at junction of T{prev} and T{k}")
                d = direction(p, C[prev]) - g
            C[k] = shoot(p, d, side_from_angles(A0, A1, A2))
            last = shoot(p, d - A0, side_from_angles(A0, A2, A1))
            prev = k
        if k < n - 2:
            B[k - 1] = last
        else:
            C[n - 1] = last
        p = last
    return C, B


def build_chain(alpha, coords: ActionAngle, tol: float = 1e-9) -> TriangleChain:
    a = _alpha_rad(alpha)
    beta = coords.beta
    slacks = moment_polytope_check(a, beta)
    if min(slacks) < -tol:
        raise ChainError(f"beta outside the moment polytope (slacks {slacks})")
    mask = tuple(s < DEG_TOL for s in slacks)
    if coords.degenerate and tuple(coords.degenerate) != mask:
        raise ChainError(f"degeneracy mask {coords.degenerate} disagrees with slacks {mask}")
    C, B = build_points(a, beta, coords.gamma, mask)
    return TriangleChain(tuple(HPoint.from_complex(z) for z in C),
                         tuple(HPoint.from_complex(z) for z in B))


def _third_vertex(p, q, A, Bq):
    """Vertex r of the clockwise triangle (p, q, r) with angles A at p and Bq at q.

    Returns (r, angle at r).
    """
    d = distance_raw(p, q)
    if d < 1e-12:
        return p, PI - A - Bq
    Cr = third_angle(A, Bq, d)
    ch = (math.cos(A) * math.cos(Cr) + math.cos(Bq)) / (math.sin(A) * math.sin(Cr))
    return shoot(p, direction(p, q) - A, math.acosh(max(ch, 1.0))), Cr


def shared_from_exterior(a: Sequence[float], C: Sequence[complex]):
    """Rebuild B_1..B_{n-3} and beta from the exterior vertices alone.

    Also returns the defect at the closing triangle, which is zero for a
    genuine chain.
    """
    n = len(a)
    B, beta = [], []
    p, first = C[0], PI - a[0] / 2
    for k in range(1, n - 2):
        r, ang = _third_vertex(p, C[k], first, PI - a[k] / 2)
        bk = TWO_PI - 2 * ang
        B.append(r)
        beta.append(bk)
        p, first = r, bk / 2
    r, _ = _third_vertex(p, C[n - 2], first, PI - a[n - 2] / 2)
    return B, beta, abs(r - C[n - 1]) / C[n - 1].imag


def coords_from_exterior(alpha, C: Sequence[complex], tol: float = 1e-6) -> ActionAngle:
    a = _alpha_rad(alpha)
    B, beta, defect = shared_from_exterior(a, C)
    if defect > tol:
        raise ChainError(f"exterior vertices do not close up a chain (defect {defect:.3g})")
    mask = degeneracy_mask(a, beta)
    return ActionAngle(beta, gammas_from_points(C, B, mask), mask)


def extract_coords(chain: TriangleChain, alpha, tol: float = 1e-6) -> ActionAngle:
    a = _alpha_rad(alpha)
    C = [p.z for p in chain.exterior]
    B, beta, defect = shared_from_exterior(a, C)
    if defect > tol:
        raise ChainError(f"chain does not close up (defect {defect:.3g})")
    for k, (got, want) in enumerate(zip(chain.shared, B), start=1):
        if abs(got.z - want) / want.imag > tol:
            raise ChainError(f"shared vertex B{k} inconsistent with the exterior vertices")
    mask = degeneracy_mask(a, beta)
    return ActionAngle(beta, gammas_from_points(C, [p.z for p in chain.shared], mask), mask)


def _interior_angle(p, q, r) -> float:
    if distance_raw(p, q) < POINT_TOL or distance_raw(p, r) < POINT_TOL:
        return 0.0
    d = abs(wrap(direction(p, q) - direction(p, r)))
    return min(d, TWO_PI - d)


def triangle_areas(chain: TriangleChain) -> list:
    C = [p.z for p in chain.exterior]
    B = [p.z for p in chain.shared]
    out = []
    for k in range(1, chain.n - 1):
        p, q, r = _tri_points(C, B, k)
        if min(distance_raw(p, q), distance_raw(q, r), distance_raw(p, r)) < POINT_TOL:
            out.append(0.0)
            continue
        s = _interior_angle(p, q, r) + _interior_angle(q, r, p) + _interior_angle(r, p, q)
        out.append(max(0.0, PI - s))
    return out


def signed_orientation(p: complex, q: complex, r: complex) -> float:
    """Negative for a clockwise triangle (p, q, r)."""
    return PI - wrap(direction(p, r) - direction(p, q))


def central_coords(alpha, gamma: float = 1.0) -> ActionAngle:
    """A regular point giving every triangle the same area lambda/(2(n-2))."""
    a = _alpha_rad(alpha)
    n = len(a)
    s = (sum(a) - 2 * PI * (n - 1)) / (n - 2)
    beta = [4 * PI - a[0] - a[1] + s]
    for i in range(n - 4):
        beta.append(beta[-1] + 2 * PI - a[i + 2] + s)
    return ActionAngle(beta, [gamma] * (n - 3), [False] * (n - 2))
