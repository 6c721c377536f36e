"""Closed-form spectra and d_1 values for complete, bipartite, cube, path and cycle graphs.

These are evaluated directly in double precision and serve as independent
oracles for the eigensolver pipeline.
"""

from __future__ import annotations

import math

import numpy as np


def spectrum_complete(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return np.array([1.0])
    return np.concatenate(([0.0], np.full(n - 1, n / (n - 1))))


def spectrum_bipartite(a: int, b: int) -> np.ndarray:
    if a < 1 or b < 1:
        raise ValueError("a, b must be >= 1")
    n = a + b
    return np.concatenate(([0.0], np.ones(n - 2), [2.0]))


def spectrum_cube(d: int) -> np.ndarray:
    """2i/d with multiplicity C(d, i)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return np.concatenate([np.full(math.comb(d, i), 2 * i / d) for i in range(d + 1)])


def spectrum_path(n: int) -> np.ndarray:
    if n < 2:
        raise ValueError("n must be >= 2")
    return 1 - np.cos(np.pi * np.arange(n) / (n - 1))


def spectrum_cycle(n: int) -> np.ndarray:
    if n < 3:
        raise ValueError("n must be >= 3")
    return np.sort(1 - np.cos(2 * np.pi * np.arange(n) / n))


def d1_complete_pair(n: int, m: int) -> float:
    """d_1(K_n, K_m) = 2(m − n) / (n(m − 1)) for n <= m."""
    if not 2 <= n <= m:
        raise ValueError("need 2 <= n <= m")
    return 2 * (m - n) / (n * (m - 1))


def d1_bipartite_pair(n: int, m: int) -> float:
    """d_1 between complete bipartite graphs on n and m vertices in total."""
    if not 2 <= n <= m:
        raise ValueError("need 2 <= n <= m")
    return 2 * (m - n) / (n * m)


def d1_cube_pair(d: int) -> float:
    """d_1(Q_d, Q_{d+1})."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return 1 / (d + 1)


def _cot2(x: float) -> float:
    return 1 / math.tan(x) ** 2


def d1_path_pair(n: int) -> float:
    """d_1(P_n, P_{n+1})."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return (_cot2(math.pi / (2 * n)) - _cot2(math.pi / (2 * (n - 1))) + 1) / (n * (n + 1))


def d1_cycle_pair(n: int) -> float:
    """d_1(C_n, C_{n+1}); the formula branches on the parity of n."""
    if n < 3:
        raise ValueError("n must be >= 3")
    scale = 1 / (n * (n + 1))
    if n % 2 == 0:
        return 1 / n + scale * (1 / (1 - math.cos(math.pi / (n + 1))) - 4 / (1 - math.cos(2 * math.pi / n)))
    return 1 / (n + 1) - scale * (1 / (1 - math.cos(math.pi / n)) - 4 / (1 - math.cos(2 * math.pi / (n + 1))))
