import functools
import math

import numpy as np
import pytest
from scipy.optimize import linprog

from specdist.graph import WeightedGraph

ACCEPTANCE_LINES: list[str] = []


def random_weighted_graph(rng, n_max=80, n_min=1, p=None, isolated_ok=True, weighted=True):
    n = int(rng.integers(n_min, n_max + 1))
    prob = float(rng.uniform(0.02, 0.6)) if p is None else p
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < prob:
                edges[(u, v)] = float(rng.uniform(0.05, 5.0)) if weighted else 1.0
    if not isolated_ok:
        # hang every isolated vertex on a random partner
        touched = {x for e in edges for x in e}
        for x in range(n):
            if x not in touched and n > 1:
                y = int(rng.integers(n - 1))
                y += y >= x
                edges[(min(x, y), max(x, y))] = float(rng.uniform(0.05, 5.0)) if weighted else 1.0
                touched.update((x, y))
    return WeightedGraph(n, edges)


def transport_lp(xs, a, ys, b, p=1.0):
    """Minimum cost of moving measure (xs, a) onto (ys, b) with cost |x - y|^p, by LP."""
    xs, a, ys, b = map(np.asarray, (xs, a, ys, b))
    m, n = len(xs), len(ys)
    cost = (np.abs(xs[:, None] - ys[None, :]) ** p).ravel()
    rows = np.zeros((m + n, m * n))
    for i in range(m):
        rows[i, i * n:(i + 1) * n] = 1
    for j in range(n):
        rows[m + j, j::n] = 1
    res = linprog(cost, A_eq=rows, b_eq=np.concatenate([a, b]), bounds=(0, None), method="highs-ds",
                  options={"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10})
    assert res.status == 0, res.message
    return float(res.fun) ** (1.0 / p)


def transport_enumerate(xs, a_units, ys, b_units):
    """Exhaustive minimum over integer transport plans with the given integer margins.

    Integer margins admit an integral optimal plan, so the minimum over
    integer plans is the exact optimum.  Rows are filled one at a time and
    memoised on the remaining column capacities.
    """
    total = sum(a_units)
    assert total == sum(b_units)
    xs, ys = list(xs), list(ys)

    def splits(r, caps, k=0):
        if k == len(caps) - 1:
            if r <= caps[k]:
                yield (r,)
            return
        for take in range(min(r, caps[k]) + 1):
            for rest in splits(r - take, caps, k + 1):
                yield (take, *rest)

    @functools.lru_cache(maxsize=None)
    def best(i, caps):
        if i == len(xs):
            return 0.0
        out = math.inf
        for row in splits(a_units[i], caps):
            cost = sum(t * abs(xs[i] - y) for t, y in zip(row, ys) if t)
            out = min(out, cost + best(i + 1, tuple(c - t for c, t in zip(caps, row))))
        return out

    return best(0, tuple(b_units)) / total


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
