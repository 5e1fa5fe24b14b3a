"""Dehn twist generators of the pure mapping class group of a punctured sphere."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable


class WordError(ValueError):
    pass


@dataclass(frozen=True, order=True, slots=True)
class TwistGen:
    """The twist tau_{i,j} about the curve enclosing punctures i..j."""

    i: int
    j: int

    def check(self, n: int) -> None:
        if not (1 <= self.i < self.j <= n - 1):
            raise WordError(f"t({self.i},{self.j}) out of range for n={n}")
        if (self.i, self.j) == (1, n - 1):
            raise WordError(f"t(1,{n - 1}) is trivial and not a generator")

    def __str__(self) -> str:
        return f"t({self.i},{self.j})"


@dataclass(frozen=True, slots=True)
class Letter:
    gen: TwistGen
    exp: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.exp)


class TwistWord(tuple):
    """Sequence of letters, each a generator with exponent +1 or -1."""

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, tuple(letters))

    def inverse(self) -> "TwistWord":
        return TwistWord(l.inverse() for l in reversed(self))

    def __add__(self, other):
        return TwistWord(tuple(self) + tuple(other))

    def reduced(self) -> "TwistWord":
        out: list[Letter] = []
        for l in self:
            if out and out[-1].gen == l.gen and out[-1].exp == -l.exp:
                out.pop()
            else:
                out.append(l)
        return TwistWord(out)

    def __str__(self) -> str:
        parts = []
        k = 0
        while k < len(self):
            l = self[k]
            run = 1
            while k + run < len(self) and self[k + run] == l:
                run += 1
            e = run * l.exp
            parts.append(str(l.gen) if e == 1 else f"{l.gen}^{e}")
            k += run
        return " ".join(parts)


def generator_set(n: int) -> list[TwistGen]:
    if n < 4:
        raise WordError(f"no nontrivial twists for n={n}")
    return [TwistGen(i, j) for i in range(1, n) for j in range(i + 1, n)
            if (i, j) != (1, n - 1)]


def _tau(i, j, e=1):
    return Letter(TwistGen(i, j), e)


def sigma_to_tau(i: int, j: int, n: int) -> TwistWord:
    """Express sigma_{i,j} as a word in the tau generators.

    Uses tau_{i,j} = (s_{i,i+1} ... s_{i,j}) (s_{i+1,i+2} ... s_{i+1,j}) ... s_{j-1,j},
    solved for the single factor s_{i,j}.
    """
    if not (1 <= i < j <= n - 1):
        raise WordError(f"sigma({i},{j}) out of range for n={n}")
    if j == i + 1:
        return TwistWord([_tau(i, j)])
    left = TwistWord()
    for k in range(i + 1, j):
        left = left + sigma_to_tau(i, k, n)
    right = TwistWord()
    for a in range(i + 1, j):
        for b in range(a + 1, j + 1):
            right = right + sigma_to_tau(a, b, n)
    middle = TwistWord() if (i, j) == (1, n - 1) else TwistWord([_tau(i, j)])
    return (left.inverse() + middle + right.inverse()).reduced()


def tau_from_sigmas(i: int, j: int, n: int) -> TwistWord:
    """The right-hand side of the sigma/tau relation, rewritten in taus."""
    word = TwistWord()
    for a in range(i, j):
        for b in range(a + 1, j + 1):
            word = word + sigma_to_tau(a, b, n)
    return word


_TOKEN = re.compile(r"\s*t\(\s*(\d+)\s*,\s*(\d+)\s*\)(?:\^\s*(-?\d+))?")


def parse_word(text: str, n: int) -> TwistWord:
    """Parse words like ``t(1,2)^2 t(1,3)``.

    The leftmost letter acts first when a word is applied.
    """
    letters: list[Letter] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordError(f"syntax error at position {pos}: {text[pos:pos + 12]!r}")
        g = TwistGen(int(m.group(1)), int(m.group(2)))
        g.check(n)
        k = int(m.group(3)) if m.group(3) is not None else 1
        letters.extend([Letter(g, 1 if k > 0 else -1)] * abs(k))
        pos = m.end()
    return TwistWord(letters)
