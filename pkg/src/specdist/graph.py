"""Finite weighted graphs, standard families, and the edge-list file format.

Vertices are dense 0-based indices.  Edges are unordered pairs stored with
the smaller endpoint first; every stored weight is strictly positive.
"""

from __future__ import annotations

import hashlib
import itertools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list document."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Immutable simple graph with positive symmetric edge weights."""

    n: int
    _weights: Mapping[Edge, float] = field(repr=False)

    def __init__(self, n: int, edges: Mapping[Edge, float] | Iterable = ()):
        n = int(n)
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        items = edges.items() if isinstance(edges, Mapping) else _normalise_items(edges)
        weights: dict[Edge, float] = {}
        for (u, v), w in items:
            u, v, w = int(u), int(v), float(w)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if not (w > 0 and np.isfinite(w)):
                raise ValueError(f"edge ({u}, {v}) has non-positive weight {w}")
            k = _key(u, v)
            if k in weights:
                raise ValueError(f"duplicate edge {k}")
            weights[k] = w
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_weights", MappingProxyType(dict(sorted(weights.items()))))

    @property
    def edges(self) -> Mapping[Edge, float]:
        return self._weights

    @property
    def num_edges(self) -> int:
        return len(self._weights)

    def weight(self, u: int, v: int) -> float:
        return self._weights.get(_key(u, v), 0.0)

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._weights

    def is_unweighted(self) -> bool:
        return all(w == 1.0 for w in self._weights.values())

    def neighbors(self, x: int) -> list[int]:
        return self.adjacency_lists()[x]

    def adjacency_lists(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self._weights:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def degrees(self) -> np.ndarray:
        """Weighted degrees of all vertices."""
        d = np.zeros(self.n)
        for (u, v), w in self._weights.items():
            d[u] += w
            d[v] += w
        return d

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for (u, v), w in self._weights.items():
            a[u, v] = a[v, u] = w
        return a

    def content_hash(self) -> str:
        return hashlib.sha256(to_edge_list(self).encode()).hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and dict(self._weights) == dict(other._weights)

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._weights.items())))


def _normalise_items(edges: Iterable) -> Iterable[tuple[Edge, float]]:
    for e in edges:
        if len(e) == 2:
            yield (e[0], e[1]), 1.0
        else:
            yield (e[0], e[1]), e[2]


def degree(g: WeightedGraph, x: int) -> float:
    if not 0 <= x < g.n:
        raise IndexError(f"vertex {x} out of range for n={g.n}")
    return float(sum(w for (u, v), w in g.edges.items() if x in (u, v)))


def connected_components(g: WeightedGraph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    adj = g.adjacency_lists()
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def disjoint_union(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """``h`` relabelled to follow the vertices of ``g``."""
    edges = dict(g.edges)
    edges.update({(u + g.n, v + g.n): w for (u, v), w in h.edges.items()})
    return WeightedGraph(g.n + h.n, edges)


# --- standard families -------------------------------------------------------

def complete(n: int) -> WeightedGraph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return WeightedGraph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> WeightedGraph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs a, b >= 1")
    return WeightedGraph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def hypercube(d: int) -> WeightedGraph:
    """Vertex x is adjacent to x ^ (1 << k) for each bit k."""
    if d < 0:
        raise ValueError("hypercube dimension must be >= 0")
    n = 1 << d
    return WeightedGraph(n, ((x, x ^ (1 << k)) for x in range(n) for k in range(d) if x < x ^ (1 << k)))


def path_graph(n: int) -> WeightedGraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return WeightedGraph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> WeightedGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3 (smaller would need a multi-edge or self-loop)")
    return WeightedGraph(n, ((i, (i + 1) % n) for i in range(n)))


def barabasi_albert(n_final: int, m: int, seed_size: int, rng_seed=None) -> WeightedGraph:
    """Preferential-attachment growth from ``complete(seed_size)``.

    Each new vertex attaches ``m`` edges to distinct existing vertices drawn
    with probability proportional to their current degree, without
    replacement within a step.
    """
    if not seed_size >= m >= 1:
        raise ValueError("need seed_size >= m >= 1")
    if n_final < seed_size:
        raise ValueError("need n_final >= seed_size")
    rng = np.random.default_rng(rng_seed)
    edges = list(itertools.combinations(range(seed_size), 2))
    deg = np.zeros(n_final)
    deg[:seed_size] = seed_size - 1
    for x in range(seed_size, n_final):
        total = deg[:x].sum()
        # a single-vertex seed has no degree mass yet
        p = deg[:x] / total if total > 0 else None
        targets = rng.choice(x, size=m, replace=False, p=p)
        for t in sorted(int(t) for t in targets):
            edges.append((t, x))
            deg[t] += 1
        deg[x] = m
    return WeightedGraph(n_final, edges)


# --- edge-list I/O -----------------------------------------------------------

def from_edge_list(text: str) -> WeightedGraph:
    """Parse an edge-list document (``n <count>`` header, then ``u v w`` lines)."""
    n = None
    edges: dict[Edge, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError("expected header 'n <vertex-count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno)
            continue
        if len(parts) != 3:
            raise GraphFormatError("expected 'u v w'", lineno)
        try:
            u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise GraphFormatError(f"cannot parse {line!r}", lineno) from None
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", lineno)
        if not (w > 0 and np.isfinite(w)):
            raise GraphFormatError(f"non-positive weight {parts[2]}", lineno)
        k = _key(u, v)
        if k in edges:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        edges[k] = w
    if n is None:
        raise GraphFormatError("missing header 'n <vertex-count>'")
    return WeightedGraph(n, edges)


def to_edge_list(g: WeightedGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v} {w!r}" for (u, v), w in g.edges.items()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def write_graph(g: WeightedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_edge_list(g))
