"""Edge-rewiring and duplication-divergence evolution of unweighted graphs.

Seeding: a trajectory seeded with integer ``s`` uses ``numpy.random.default_rng(s)``.
When one master seed drives several trajectories, :func:`split_seeds`
derives child seeds with ``SeedSequence(master).spawn``, so every child can
be rerun on its own.
"""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import rankdata

from .graph import WeightedGraph, barabasi_albert
from .measure import from_spectrum, wasserstein
from .spectral import spectrum

MAX_RESAMPLE = 100


class RewireSaturated(RuntimeError):
    """No admissible rewiring was found within the resampling budget."""


class DegenerateRankWarning(UserWarning):
    pass


def split_seeds(master: int, count: int) -> list[int]:
    children = np.random.SeedSequence(master).spawn(count)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


def rewire_edges(g: WeightedGraph, e1: tuple[int, int], e2: tuple[int, int]) -> WeightedGraph:
    """Replace v1v3 and v4v5 by v1v4 and v3v5, where e1 = (v1, v3) and e2 = (v4, v5)."""
    (v1, v3), (v4, v5) = e1, e2
    if len({v1, v3, v4, v5}) != 4:
        raise ValueError("rewiring needs four distinct vertices")
    if not (g.has_edge(v1, v3) and g.has_edge(v4, v5)):
        raise ValueError("both rewired pairs must be edges")
    if g.has_edge(v1, v4) or g.has_edge(v3, v5):
        raise ValueError("rewiring would duplicate an existing edge")
    edges = {e: w for e, w in g.edges.items() if set(e) not in ({v1, v3}, {v4, v5})}
    edges[(min(v1, v4), max(v1, v4))] = 1.0
    edges[(min(v3, v5), max(v3, v5))] = 1.0
    return WeightedGraph(g.n, edges)


def _rewire_ok(g: WeightedGraph, e1, e2) -> bool:
    (v1, v3), (v4, v5) = e1, e2
    return len({v1, v3, v4, v5}) == 4 and not g.has_edge(v1, v4) and not g.has_edge(v3, v5)


def rewire_candidates(g: WeightedGraph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Every admissible oriented pair of edges; exhaustive, for small graphs."""
    es = list(g.edges)
    out = []
    for i, (a, b) in enumerate(es):
        for c, d in es[i + 1:]:
            for e1 in ((a, b), (b, a)):
                for e2 in ((c, d), (d, c)):
                    if _rewire_ok(g, e1, e2):
                        out.append((e1, e2))
    return out


def edge_rewire(g: WeightedGraph, rng, max_resample: int = MAX_RESAMPLE) -> WeightedGraph:
    """Degree-preserving swap of two random edges.

    Draws two distinct edges, each in a random orientation, and resamples
    when the four endpoints are not distinct or a new edge already exists.
    """
    es = list(g.edges)
    if len(es) < 2 or len({x for e in es for x in e}) < 4:
        raise ValueError("rewiring needs at least two edges on four distinct vertices")
    rng = np.random.default_rng(rng)
    for _ in range(max_resample):
        i, k = rng.choice(len(es), size=2, replace=False)
        flip = rng.integers(0, 2, size=2)
        e1 = es[i][::-1] if flip[0] else es[i]
        e2 = es[k][::-1] if flip[1] else es[k]
        if _rewire_ok(g, e1, e2):
            return rewire_edges(g, e1, e2)
    raise RewireSaturated(f"no admissible rewiring after {max_resample} draws")


def duplicate_vertex(g: WeightedGraph, target: int, keep) -> WeightedGraph:
    """Add a replica of ``target`` wired to the neighbours selected by ``keep``.

    ``keep`` is a boolean per neighbour in ascending order.  With nothing
    kept the graph is returned unchanged.
    """
    nbrs = g.neighbors(target)
    keep = np.asarray(keep, dtype=bool)
    if keep.shape != (len(nbrs),):
        raise ValueError("need one keep flag per neighbour")
    if not keep.any():
        return g
    edges = dict(g.edges)
    for y in np.asarray(nbrs)[keep]:
        edges[(int(y), g.n)] = 1.0
    return WeightedGraph(g.n + 1, edges)


def dup_div(g: WeightedGraph, p_keep: float = 0.5, rng=None) -> WeightedGraph:
    """Duplicate a uniformly chosen vertex; each inherited edge survives with ``p_keep``."""
    if not 0 <= p_keep <= 1:
        raise ValueError("p_keep must be a probability")
    rng = np.random.default_rng(rng)
    target = int(rng.integers(g.n))
    deg = len(g.neighbors(target))
    return duplicate_vertex(g, target, rng.random(deg) < p_keep)


@dataclass
class Trajectory:
    op: str
    rng_seed: int | None
    steps: list[int] = field(default_factory=list)
    n_vertices: list[int] = field(default_factory=list)
    d1: list[float] = field(default_factory=list)
    graph_hash: list[str] = field(default_factory=list)
    saturated_steps: list[int] = field(default_factory=list)

    def records(self):
        return list(zip(self.steps, self.n_vertices, self.d1))

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("step,n,d1\n")
        for s, n, d in self.records():
            buf.write(f"{s},{n},{d:.17g}\n")
        return buf.getvalue()

    def summary(self) -> dict:
        return {
            "op": self.op,
            "seed": self.rng_seed,
            "rho": spearman_rho(self),
            "max_d1": max(self.d1),
        }


OPERATIONS = ("rewire", "dupdiv")


def evolve_trajectory(g0: WeightedGraph, op: str, steps: int, sample_every: int = 1,
                      rng_seed=None, p_keep: float = 0.5) -> Trajectory:
    """Apply ``op`` ``steps`` times, recording d_1 to ``g0`` at step 0, every
    ``sample_every`` steps, and at the final step."""
    if op not in OPERATIONS:
        raise ValueError(f"op must be one of {OPERATIONS}")
    if steps < 0 or sample_every < 1:
        raise ValueError("need steps >= 0 and sample_every >= 1")
    rng = np.random.default_rng(rng_seed)
    mu0 = from_spectrum(spectrum(g0))
    traj = Trajectory(op, rng_seed)
    g = g0

    def record(step):
        traj.steps.append(step)
        traj.n_vertices.append(g.n)
        traj.d1.append(0.0 if g is g0 else wasserstein(1, mu0, from_spectrum(spectrum(g))))
        traj.graph_hash.append(g.content_hash())

    record(0)
    for step in range(1, steps + 1):
        if op == "rewire":
            try:
                g = edge_rewire(g, rng)
            except RewireSaturated:
                traj.saturated_steps.append(step)
        else:
            g = dup_div(g, p_keep, rng)
        if step % sample_every == 0 or step == steps:
            record(step)
    return traj


def ba_trajectory(op: str, n: int = 300, steps: int = 200, sample_every: int = 10, seed: int = 0,
                  m: int = 2, seed_size: int = 10, p_keep: float = 0.5) -> Trajectory:
    """Evolve a fresh Barabási–Albert graph.

    ``seed`` is split into one child for the starting graph and one for the
    edit sequence, so the same seed gives the same starting graph for
    either operation.
    """
    graph_seed, evo_seed = split_seeds(seed, 2)
    g0 = barabasi_albert(n, m, seed_size, graph_seed)
    traj = evolve_trajectory(g0, op, steps, sample_every, evo_seed, p_keep)
    traj.rng_seed = seed
    return traj


def spearman_rho(t) -> float:
    """Spearman rank correlation of step against d_1, with average ranks for ties.

    Accepts a :class:`Trajectory` or an ``(x, y)`` pair.  A constant column
    yields 0 and a :class:`DegenerateRankWarning`.
    """
    x, y = (t.steps, t.d1) if isinstance(t, Trajectory) else t
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if x.size != y.size or x.size < 3:
        raise ValueError("need at least three paired records")
    rx, ry = rankdata(x) - (x.size + 1) / 2, rankdata(y) - (y.size + 1) / 2
    denom = np.sqrt(np.dot(rx, rx) * np.dot(ry, ry))
    if denom == 0:
        warnings.warn("constant column; Spearman rho set to 0", DegenerateRankWarning, stacklevel=2)
        return 0.0
    return float(np.clip(np.dot(rx, ry) / denom, -1.0, 1.0))


def trajectories_to_dat(rewire: list[Trajectory], dupdiv: list[Trajectory]) -> str:
    """Whitespace columns ``step rewire_d1 dupdiv_d1`` (means over seeds) for plotting."""
    steps = rewire[0].steps if rewire else dupdiv[0].steps
    lines = ["# step mean_d1_rewire mean_d1_dupdiv"]
    for i, s in enumerate(steps):
        r = np.mean([t.d1[i] for t in rewire]) if rewire else float("nan")
        d = np.mean([t.d1[i] for t in dupdiv]) if dupdiv else float("nan")
        lines.append(f"{s} {r:.17g} {d:.17g}")
    return "\n".join(lines) + "\n"


def read_trajectory_csv(text: str) -> list[tuple[int, int, float]]:
    rows = list(csv.DictReader(io.StringIO(text)))
    return [(int(r["step"]), int(r["n"]), float(r["d1"])) for r in rows]
