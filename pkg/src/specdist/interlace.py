"""Graph edits with known eigenvalue interlacing, and the resulting d_1 bound.

An edit turning G (N vertices) into G' (N - j vertices) interlaces with
constants (k1, k2) when λ_{i-k1} ≤ λ'_i ≤ λ_{i+k2} for i = 1..N-j, reading
λ_i = 0 for i ≤ 0 and λ_i = 2 for i > N.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import WeightedGraph, connected_components
from .spectral import TOL_EIG


@dataclass(frozen=True)
class InterlaceParams:
    k1: int
    k2: int
    j: int

    def __post_init__(self):
        if self.k1 < 0 or self.k2 < 0:
            raise ValueError("k1 and k2 must be nonnegative")


@dataclass
class InterlaceReport:
    params: InterlaceParams
    # (i, side, excess) with 1-based i; side is "lower" or "upper"
    violations: list[tuple[int, str, float]] = field(default_factory=list)
    boundary: list[tuple[int, str, float]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def delete_subgraph(g: WeightedGraph, sub: WeightedGraph) -> tuple[WeightedGraph, InterlaceParams]:
    """Subtract the weights of ``sub`` from ``g``; zeroed pairs stop being edges.

    Only vertices touched by an edge of ``sub`` count toward its vertex and
    component numbers.
    """
    if sub.n != g.n:
        raise ValueError("subgraph must live on the same vertex set")
    edges = dict(g.edges)
    for (u, v), w in sub.edges.items():
        have = edges.get((u, v), 0.0)
        if w > have * (1 + 1e-12):
            raise ValueError(f"subgraph weight {w} on ({u}, {v}) exceeds graph weight {have}")
        rest = have - w
        if rest <= have * 1e-12:
            del edges[(u, v)]
        else:
            edges[(u, v)] = rest
    touched = {x for e in sub.edges for x in e}
    n_comp = sum(1 for c in connected_components(sub) if c[0] in touched)
    params = InterlaceParams(k1=len(touched) - n_comp, k2=len(touched), j=0)
    return WeightedGraph(g.n, edges), params


def delete_edge(g: WeightedGraph, u: int, v: int) -> tuple[WeightedGraph, InterlaceParams]:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return delete_subgraph(g, WeightedGraph(g.n, {(u, v): g.weight(u, v)}))


def _merge(g: WeightedGraph, keep: int, drop: int, skip: tuple[int, int] | None, collapse: bool):
    """Identify ``drop`` into ``keep`` and relabel vertices above ``drop`` down by one."""

    def relabel(x):
        x = keep if x == drop else x
        return x - 1 if x > drop else x

    edges: dict[tuple[int, int], float] = {}
    for (a, b), w in g.edges.items():
        if skip is not None and {a, b} == set(skip):
            continue
        a2, b2 = relabel(a), relabel(b)
        k = (min(a2, b2), max(a2, b2))
        if k in edges:
            edges[k] = 1.0 if collapse else edges[k] + w
        else:
            edges[k] = w
    return WeightedGraph(g.n - 1, edges)


def contract_vertices(g: WeightedGraph, u: int, v: int) -> tuple[WeightedGraph, InterlaceParams]:
    """Merge two non-adjacent vertices with disjoint neighbourhoods.

    The merged vertex takes the smaller label; higher labels shift down.
    """
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent")
    if set(g.neighbors(u)) & set(g.neighbors(v)):
        raise ValueError(f"vertices {u} and {v} share a neighbour")
    keep, drop = min(u, v), max(u, v)
    return _merge(g, keep, drop, None, collapse=False), InterlaceParams(0, 1, 1)


def common_neighbors(g: WeightedGraph, u: int, v: int) -> int:
    return len(set(g.neighbors(u)) & set(g.neighbors(v)))


def contract_edge(g: WeightedGraph, u: int, v: int) -> tuple[WeightedGraph, InterlaceParams]:
    """Delete edge uv of an unweighted graph and identify u with v.

    Parallel edges created through common neighbours collapse to one unit
    edge.  Only the unweighted case has known interlacing constants.
    """
    if not g.is_unweighted():
        raise ValueError("edge contraction is only supported for unweighted graphs")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if len(g.neighbors(u)) <= 1 or len(g.neighbors(v)) <= 1:
        raise ValueError("both endpoints must have degree > 1")
    m = common_neighbors(g, u, v)
    params = InterlaceParams(2 * m, 1 + 2 * m, 1) if m else InterlaceParams(0, 2, 1)
    keep, drop = min(u, v), max(u, v)
    return _merge(g, keep, drop, (u, v), collapse=True), params


def check_interlacing(lam, lam2, params: InterlaceParams, tol: float = TOL_EIG) -> InterlaceReport:
    """Check λ_{i-k1} ≤ λ'_i ≤ λ_{i+k2} for every i.

    Excesses up to ``tol`` go to ``boundary``; larger ones are violations.
    """
    lam = np.sort(np.asarray(lam, dtype=float))
    lam2 = np.sort(np.asarray(lam2, dtype=float))
    n = lam.size
    if lam2.size != n - params.j:
        raise ValueError(f"expected {n - params.j} eigenvalues for G', got {lam2.size}")

    def at(i):
        if i <= 0:
            return 0.0
        if i > n:
            return 2.0
        return lam[i - 1]

    report = InterlaceReport(params)
    for i in range(1, lam2.size + 1):
        x = lam2[i - 1]
        for side, excess in (("lower", at(i - params.k1) - x), ("upper", x - at(i + params.k2))):
            if excess > tol:
                report.violations.append((i, side, float(excess)))
            elif excess > 0:
                report.boundary.append((i, side, float(excess)))
    return report


def d1_bound(params: InterlaceParams, n: int) -> float:
    """2(k1 + k2 + j + 1)/N from the direct transport plan; N is the size of G.

    With j < 0 the roles of the graphs swap: the larger graph has n - j
    vertices and shrinks by -j.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    k1, k2, j = params.k1, params.k2, params.j
    if j < 0:
        return 2 * (k1 + k2 - j + 1) / (n - j)
    return 2 * (k1 + k2 + j + 1) / n
