import math
import random

import pytest

from orbitforge import chains
from orbitforge.chains import ActionAngle, AngleVector, RationalAngle


def random_alpha(rng: random.Random, n: int, den: int = 12) -> AngleVector:
    while True:
        a = AngleVector([RationalAngle(rng.randint(den + 1, 2 * den - 1), den) for _ in range(n)])
        if a.excess > 0:
            return a


def random_coords(rng: random.Random, alpha: AngleVector, floor: float = 0.05) -> ActionAngle:
    """A regular point: slacks are a random positive split of lambda."""
    a = alpha.radians
    n = alpha.n
    lam = chains.validate_alpha(alpha)
    w = [rng.uniform(floor, 1.0) for _ in range(n - 2)]
    s = sum(w)
    slack = [lam * x / s for x in w]
    beta = [4 * math.pi - a[0] - a[1] + slack[0]]
    for i in range(n - 4):
        beta.append(beta[-1] + 2 * math.pi - a[i + 2] + slack[i + 1])
    gamma = [rng.uniform(0, 2 * math.pi) for _ in beta]
    return ActionAngle(beta, gamma, chains.degeneracy_mask(alpha, beta))


@pytest.fixture
def rng():
    return random.Random(20240607)


# one line per acceptance criterion at the end of the run

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, supplementary=False): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    mark = _marks.get(report.nodeid)
    if mark is None:
        return
    key = (mark.args[0], mark.kwargs.get("supplementary", False))
    title = mark.args[1] if len(mark.args) > 1 else ""
    prev = _outcomes.get(key, (title, True))
    _outcomes[key] = (prev[0] or title, prev[1] and report.outcome == "passed")


_marks: dict = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _marks[item.nodeid] = m


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for (num, supp), (title, ok) in sorted(_outcomes.items()):
        tag = f"{num}" + (" (supplementary)" if supp else "")
        tr.write_line(f"criterion {tag}: {'PASS' if ok else 'FAIL'}  {title}")
