"""Breadth-first orbit enumeration under the twist generators."""
from __future__ import annotations

import builtins
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from . import chains
from .chains import ActionAngle, AngleVector, ChainError
from .hyperbolic import TWO_PI, wrap
from .representation import (
    DIRECT,
    Representation,
    WordConvention,
    apply_word,
    coords_from_rep,
    from_coords,
    twist_algebraic,
)
from .surface import Letter, TwistWord, generator_set, parse_word

DEFAULT_TOL = 1e-6
DEFAULT_MAX_POINTS = 20000
DEFAULT_MAX_LAYERS = 200


class Status(str, Enum):
    FINITE = "Finite"
    EXHAUSTED = "Exhausted"


@dataclass(frozen=True, order=True)
class CanonicalKey:
    mask: tuple
    beta: tuple
    gamma: tuple


def canonicalize(coords: ActionAngle, tol: float = DEFAULT_TOL) -> CanonicalKey:
    """Quantize coordinates to multiples of tol; gamma is reduced on the circle."""
    gam = []
    for g in coords.gamma:
        if g is None:
            continue
        g = wrap(g)
        if g > TWO_PI - tol / 2:
            g -= TWO_PI
        gam.append(int(round(g / tol)))
    return CanonicalKey(tuple(coords.degenerate),
                        tuple(int(round(b / tol)) for b in coords.beta),
                        tuple(gam))


class OrbitIndex:
    """Insert-if-absent set of coordinates, equal when within tol.

    Values are bucketed on a grid much coarser than tol; a value lying within
    tol of a cell wall is also looked up in the neighbouring cell, so any two
    points closer than tol meet in at least one bucket.
    """

    def __init__(self, tol: float = DEFAULT_TOL, cell: float = 1e-3):
        if cell <= 2 * tol:
            raise ValueError("grid cell must exceed twice the tolerance")
        self.tol = tol
        self.cell = cell
        self.ncirc = math.ceil(TWO_PI / cell)
        self._buckets: dict = {}
        self.items: list = []

    def _cells(self, v: float, circular: bool):
        c = math.floor(v / self.cell)
        lo = c * self.cell
        hi = (c + 1) * self.cell
        if circular:
            hi = min(hi, TWO_PI)
            opts = [c % self.ncirc]
            if v - lo < self.tol:
                opts.append((c - 1) % self.ncirc)
            if hi - v < self.tol:
                opts.append((c + 1) % self.ncirc)
            return opts
        opts = [c]
        if v - lo < self.tol:
            opts.append(c - 1)
        if hi - v < self.tol:
            opts.append(c + 1)
        return opts

    def _probe_keys(self, coords: ActionAngle):
        parts = [self._cells(b, False) for b in coords.beta]
        parts += [self._cells(wrap(g), True) for g in coords.gamma if g is not None]
        for combo in itertools.product(*parts):
            yield (coords.degenerate, combo)

    def _home_key(self, coords: ActionAngle):
        return (coords.degenerate,
                tuple([math.floor(b / self.cell) for b in coords.beta]
                      + [math.floor(wrap(g) / self.cell) % self.ncirc
                         for g in coords.gamma if g is not None]))

    def find(self, coords: ActionAngle) -> Optional[int]:
        for key in self._probe_keys(coords):
            for idx in self._buckets.get(key, ()):
                if self.items[idx].max_deviation(coords) < self.tol:
                    return idx
        return None

    def insert(self, coords: ActionAngle) -> tuple:
        """Return (index, created)."""
        idx = self.find(coords)
        if idx is not None:
            return idx, False
        self.items.append(coords)
        idx = len(self.items) - 1
        self._buckets.setdefault(self._home_key(coords), []).append(idx)
        return idx, True

    def __len__(self):
        return len(self.items)


@dataclass
class OrbitPoint:
    coords: ActionAngle
    word: TwistWord
    discovered_at: int


@dataclass
class OrbitResult:
    alpha: AngleVector
    status: Status
    points: list
    layers: list
    tol: float = DEFAULT_TOL

    @property
    def n(self) -> int:
        return self.alpha.n

    def __len__(self):
        return len(self.points)


def _expand(args):
    rep, gens = args
    out = []
    for g in gens:
        r = twist_algebraic(rep, g).normalized()
        out.append((r, coords_from_rep(r)))
    return out


def enumerate(alpha: AngleVector, seed: ActionAngle, tol: float = DEFAULT_TOL,
              max_points: int = DEFAULT_MAX_POINTS, max_layers: int = DEFAULT_MAX_LAYERS,
              threads: int = 1, generators: Sequence = None) -> OrbitResult:
    """Orbit of the seed under the twist generators.

    Candidates are produced layer by layer (optionally in worker processes)
    and deduplicated in a fixed order, so the result never depends on the
    schedule.
    """
    chains.validate_alpha(alpha)
    slacks = chains.moment_polytope_check(alpha, seed.beta)
    if min(slacks) < -1e-9:
        raise ChainError(f"seed outside the moment polytope (slacks {slacks})")
    gens = [Letter(g) for g in (generators or generator_set(alpha.n))]
    rep0 = from_coords(alpha, seed).normalized()
    c0 = coords_from_rep(rep0)
    index = OrbitIndex(tol)
    index.insert(c0)
    points = [OrbitPoint(c0, TwistWord(), 0)]
    reps = [rep0]
    frontier = [0]
    layers = [1]
    status = Status.FINITE
    pool = ProcessPoolExecutor(threads) if threads > 1 else None
    try:
        depth = 0
        while frontier:
            if depth >= max_layers:
                status = Status.EXHAUSTED
                break
            depth += 1
            jobs = [(reps[p], gens) for p in frontier]
            if pool is not None:
                results = pool.map(_expand, jobs, chunksize=max(1, len(jobs) // (4 * threads)))
            else:
                results = map(_expand, jobs)
            nxt = []
            full = False
            for parent, outs in zip(frontier, results):
                for g, (r, c) in zip(gens, outs):
                    idx, new = index.insert(c)
                    if not new:
                        continue
                    points.append(OrbitPoint(c, points[parent].word + TwistWord([g]), depth))
                    reps.append(r)
                    nxt.append(idx)
                    if len(points) >= max_points:
                        full = True
                        break
                if full:
                    break
            layers.append(len(nxt))
            frontier = nxt
            if full:
                status = Status.EXHAUSTED
                break
    finally:
        if pool is not None:
            pool.shutdown()
    if status is Status.FINITE and layers[-1] != 0:
        layers.append(0)
    points.sort(key=lambda p: canonicalize(p.coords, tol))
    return OrbitResult(alpha, status, points, layers, tol)


def replay(alpha: AngleVector, seed: ActionAngle, word,
           convention: WordConvention = DIRECT) -> ActionAngle:
    """Coordinates of word.seed; enumerate() witnesses use the DIRECT convention."""
    if isinstance(word, str):
        word = parse_word(word, alpha.n)
    rep = from_coords(alpha, seed)
    return coords_from_rep(apply_word(rep, word, convention))


# golden tables

@dataclass
class GoldenRow:
    coords: ActionAngle
    word: str


@dataclass
class GoldenTable:
    name: str
    alpha: AngleVector
    seed: ActionAngle
    rows: list
    tol: float = DEFAULT_TOL
    convention: WordConvention = DIRECT
    errata: list = field(default_factory=list)

    def corrected(self) -> "GoldenTable":
        """Copy with the recorded errata applied."""
        rows = list(self.rows)
        for e in self.errata:
            k = e["row"]
            if e["field"] == "word":
                rows[k] = GoldenRow(rows[k].coords, e["corrected"])
            else:
                rows[k] = GoldenRow(e["corrected"], rows[k].word)
        return GoldenTable(self.name, self.alpha, self.seed, rows, self.tol, self.convention, [])


@dataclass
class VerifyReport:
    rows: int
    matched: int
    replay_failures: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    duplicate_rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.replay_failures or self.missing or self.extra or self.duplicate_rows)

    def summary(self) -> str:
        head = "OK" if self.ok else "FAIL"
        s = f"{head}: {self.matched}/{self.rows} rows matched"
        if self.replay_failures:
            s += f"; {len(self.replay_failures)} word replays off"
        if self.missing:
            s += f"; {len(self.missing)} rows not in orbit"
        if self.extra:
            s += f"; {len(self.extra)} orbit points not in table"
        if self.duplicate_rows:
            s += f"; {len(self.duplicate_rows)} rows share a point"
        return s


def verify_against_table(result: OrbitResult, reference: GoldenTable,
                         convention: WordConvention | None = None) -> VerifyReport:
    """Check word replays row by row and the bijection between orbit and table.

    Words are applied with the table's own convention unless one is given.
    """
    convention = convention or reference.convention
    tol = max(result.tol, reference.tol)
    rep = VerifyReport(rows=len(reference.rows), matched=0)
    base = from_coords(reference.alpha, reference.seed)
    for k, row in builtins.enumerate(reference.rows):
        word = parse_word(row.word, reference.alpha.n)
        got = coords_from_rep(apply_word(base, word, convention))
        dev = got.max_deviation(row.coords)
        if dev >= tol:
            rep.replay_failures.append((k, row.word, got, dev))
    index = OrbitIndex(tol)
    for p in result.points:
        index.insert(p.coords)
    hit = {}
    for k, row in builtins.enumerate(reference.rows):
        idx = index.find(row.coords)
        if idx is None:
            rep.missing.append((k, row.word))
        elif idx in hit:
            rep.duplicate_rows.append((hit[idx], k))
        else:
            hit[idx] = k
    rep.matched = len(hit)
    rep.extra = [index.items[i] for i in range(len(index.items)) if i not in hit]
    return rep


def beta_membership_check(result: OrbitResult, max_den: int = 7, tol: float = DEFAULT_TOL) -> list:
    """Regular orbit points whose beta values leave the fifteen-angle list.

    Returns a list of (point index, offending beta values); empty means pass.
    """
    from .trigfields import ADMISSIBLE_BETAS, recognize_rational_angle

    bad = []
    for k, p in builtins.enumerate(result.points):
        if not p.coords.regular:
            continue
        off = []
        for b in p.coords.beta:
            r = recognize_rational_angle(b, max_den, tol)
            if r is None or r not in ADMISSIBLE_BETAS:
                off.append(b)
        if off:
            bad.append((k, off))
    return bad
