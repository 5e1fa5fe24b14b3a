"""Matrix representations and the two independent twist computations."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import chains
from .chains import ActionAngle, AngleVector, ChainError, NotDTError, TriangleChain
from .hyperbolic import (
    TWO_PI,
    ClassificationError,
    Isometry,
    direction,
    elliptic_matrix,
    fixed_point_raw,
    mat_inv,
    mat_mul,
    mat_renorm,
    rotation_angle_raw,
    shoot,
)
from .surface import Letter, TwistGen, TwistWord

IDENTITY = (1.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class Representation:
    """Images of c_1..c_n stored as raw 4-tuples."""

    alpha: AngleVector
    mats: tuple

    @property
    def n(self) -> int:
        return len(self.mats)

    @property
    def rho(self) -> list:
        return [Isometry.normalized(*m) for m in self.mats]

    def product(self, i: int = 1, j: int | None = None):
        """rho(c_i ... c_j), multiplied left to right."""
        j = self.n if j is None else j
        m = IDENTITY
        for k in range(i - 1, j):
            m = mat_mul(m, self.mats[k])
        return mat_renorm(m)

    def product_defect(self) -> float:
        m = self.product()
        if m[0] < 0:
            m = tuple(-v for v in m)
        return max(abs(u - v) for u, v in zip(m, IDENTITY))

    def normalized(self) -> "Representation":
        """Conjugate so that C_1 = i and the next distinct C_k lies straight above it."""
        pts = [fixed_point_raw(m) for m in self.mats]
        p = pts[0]
        g = (1.0 / math.sqrt(p.imag), -p.real / math.sqrt(p.imag), 0.0, math.sqrt(p.imag))
        for q in pts[1:]:
            if abs(q - p) > 1e-9 * p.imag:
                th = direction(p, q)
                s, c = math.sin(th / 2), math.cos(th / 2)
                # rotation about i by -th, composed after moving p to i
                g = mat_mul((c, -s, s, c), g)
                break
        gi = mat_inv(g)
        mats = tuple(mat_renorm(mat_mul(mat_mul(g, m), gi)) for m in self.mats)
        return Representation(self.alpha, mats)


def from_chain(chain: TriangleChain, alpha: AngleVector) -> Representation:
    a = alpha.radians
    mats = tuple(elliptic_matrix(p.x, p.y, t) for p, t in zip(chain.exterior, a))
    rep = Representation(alpha, mats)
    if rep.product_defect() > 1e-6:
        raise ChainError(f"chain does not give a representation (defect {rep.product_defect():.3g})")
    return rep


def from_coords(alpha: AngleVector, coords: ActionAngle) -> Representation:
    return from_chain(chains.build_chain(alpha, coords), alpha)


def twist_algebraic(rep: Representation, t: TwistGen | Letter) -> Representation:
    """Apply tau_{i,j} (or its inverse) by partial conjugation.

    rho'(c_k) = P rho(c_k) P^-1 for i <= k <= j with P = rho(c_i ... c_j).
    """
    if isinstance(t, Letter):
        gen, e = t.gen, t.exp
    else:
        gen, e = t, 1
    i, j = gen.i, gen.j
    p = rep.product(i, j)
    pi_ = mat_inv(p)
    if e < 0:
        p, pi_ = pi_, p
    mats = list(rep.mats)
    for k in range(i - 1, j):
        mats[k] = mat_renorm(mat_mul(mat_mul(p, mats[k]), pi_))
    return Representation(rep.alpha, tuple(mats))


def twist_angle(rep: Representation, gen: TwistGen) -> float:
    """beta' of the twist: rotation angle of rho(c_i ... c_j)^-1.

    tau_{i,j} turns the part of the chain beyond c_j by this angle.
    """
    return rotation_angle_raw(mat_inv(rep.product(gen.i, gen.j)))


@dataclass(frozen=True)
class WordConvention:
    """How a written word acts on a representation.

    leftmost_first: the first written letter is applied first.
    inverse_letters: each letter acts by the inverse partial conjugation.
    """

    leftmost_first: bool = True
    inverse_letters: bool = False


DIRECT = WordConvention(True, False)
# the convention under which the published orbit tables replay
TABLE = WordConvention(True, True)


def apply_word(rep: Representation, word: TwistWord, convention: WordConvention = DIRECT) -> Representation:
    letters = word if convention.leftmost_first else reversed(word)
    for l in letters:
        rep = twist_algebraic(rep, l.inverse() if convention.inverse_letters else l)
    return rep


def coords_from_rep(rep: Representation) -> ActionAngle:
    n = rep.n
    a = rep.alpha.radians
    C = []
    for m in rep.mats:
        try:
            C.append(fixed_point_raw(m))
        except ClassificationError as exc:
            raise NotDTError(f"peripheral holonomy not elliptic: {exc}") from None
    B, beta = [], []
    m = rep.mats[0]
    for k in range(1, n - 2):
        m = mat_renorm(mat_mul(m, rep.mats[k]))
        try:
            B.append(fixed_point_raw(m))
            beta.append(rotation_angle_raw(mat_inv(m)))
        except ClassificationError as exc:
            raise NotDTError(f"interior holonomy not elliptic: {exc}") from None
    mask = chains.degeneracy_mask(a, beta)
    return ActionAngle(beta, chains.gammas_from_points(C, B, mask), mask)


def twist_geometric(alpha: AngleVector, coords: ActionAngle, t: TwistGen | Letter) -> ActionAngle:
    """Twist by rotating part of the chain, without any matrices.

    The chain is rebuilt in the cyclic order c_i, ..., c_n, c_1, ..., c_{i-1};
    the vertices C_{j+1}, ..., C_{i-1} then turn about the shared vertex
    that separates c_i..c_j from the rest, and the usual chain is read off
    the moved exterior vertices.
    """
    if isinstance(t, Letter):
        gen, e = t.gen, t.exp
    else:
        gen, e = t, 1
    a = alpha.radians
    n = len(a)
    C, _ = chains.build_points(a, coords.beta, coords.gamma,
                               coords.degenerate or chains.degeneracy_mask(a, coords.beta))
    order = [(gen.i - 1 + k) % n for k in range(n)]
    ap = [a[k] for k in order]
    Cp = [C[k] for k in order]
    Bp, betap, _ = chains.shared_from_exterior(ap, Cp)
    m = gen.j - gen.i
    centre = Bp[m - 1]
    angle = e * betap[m - 1]
    for pos in range(m + 1, n):
        k = order[pos]
        C[k] = _rotate(centre, C[k], angle)
    return chains.coords_from_exterior(a, C)


def _rotate(centre: complex, z: complex, angle: float) -> complex:
    if abs(z - centre) < 1e-14 * centre.imag:
        return z
    from .hyperbolic import distance_raw
    return shoot(centre, direction(centre, z) + angle, distance_raw(centre, z))
