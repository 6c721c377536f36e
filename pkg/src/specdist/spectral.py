"""Normalized Laplacian spectra, Dirichlet spectra, and rooted spectral measures.

All solves use the symmetric conjugate S = D^{-1/2} (D - A) D^{-1/2} of the
normalized Laplacian I - D^{-1}A, which has the same spectrum.  Isolated
vertices get the identity row, i.e. the exact eigenvalue 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import WeightedGraph
from .measure import TOL_MERGE, SpectralMeasure, from_spectrum

TOL_EIG = 1e-9


class SpectrumError(RuntimeError):
    """Eigensolver failure or a spectrum outside [0, 2]."""


def _symmetric_form(weights: np.ndarray, degrees: np.ndarray) -> np.ndarray:
    inv = np.zeros_like(degrees)
    pos = degrees > 0
    inv[pos] = 1.0 / np.sqrt(degrees[pos])
    s = -(inv[:, None] * weights * inv[None, :])
    np.fill_diagonal(s, 1.0)
    return s


def normalized_laplacian(g: WeightedGraph) -> np.ndarray:
    """Symmetric N×N matrix with unit diagonal and -θ_xy/√(θ_x θ_y) off it."""
    return _symmetric_form(g.adjacency_matrix(), g.degrees())


def _eigh(s: np.ndarray, vectors: bool):
    try:
        if vectors:
            return np.linalg.eigh(s)
        return np.linalg.eigvalsh(s), None
    except np.linalg.LinAlgError as exc:
        raise SpectrumError(
            f"symmetric eigensolver did not converge (n={s.shape[0]}, "
            f"‖S‖_F={np.linalg.norm(s):.6g}, finite={np.isfinite(s).all()})"
        ) from exc


def _checked(values: np.ndarray, scale: float) -> np.ndarray:
    tol = TOL_EIG * max(1.0, scale)
    if values.size and (values[0] < -tol or values[-1] > 2 + tol):
        raise SpectrumError(f"eigenvalues [{values[0]!r}, {values[-1]!r}] escape [0, 2]")
    return np.clip(values, 0.0, 2.0)


def spectrum(g: WeightedGraph) -> np.ndarray:
    """All N eigenvalues of the normalized Laplacian, ascending, clamped to [0, 2]."""
    deg = g.degrees()
    active = np.flatnonzero(deg > 0)
    values = np.ones(g.n)
    if active.size:
        s = _symmetric_form(g.adjacency_matrix()[np.ix_(active, active)], deg[active])
        ev, _ = _eigh(s, vectors=False)
        values[: active.size] = ev
    values.sort()
    return _checked(values, 2.0)


def eigenpairs(g: WeightedGraph) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending, clamped) and orthonormal eigenvectors of S."""
    s = normalized_laplacian(g)
    vals, vecs = _eigh(s, vectors=True)
    return _checked(vals, 2.0), vecs


# --- infinite families and Dirichlet spectra ----------------------------------

@dataclass(frozen=True)
class LineFamily:
    """Unit-weight infinite path: ``half=False`` is ℤ, ``half=True`` is ℕ = {0, 1, ...}."""

    half: bool = False

    @property
    def name(self) -> str:
        return "N" if self.half else "Z"

    def contains(self, x: int) -> bool:
        return x >= 0 or not self.half

    def degree(self, x: int) -> float:
        if not self.contains(x):
            raise ValueError(f"{x} is not a vertex of {self.name}")
        return 1.0 if self.half and x == 0 else 2.0

    def weight(self, x: int, y: int) -> float:
        return 1.0 if abs(x - y) == 1 and self.contains(x) and self.contains(y) else 0.0

    def segment(self, n: int) -> list[int]:
        """Canonical exhaustion set of size n; segments are nested in n."""
        if n < 1:
            raise ValueError("segment size must be positive")
        start = 0 if self.half else -((n - 1) // 2)
        return list(range(start, start + n))


INTEGERS = LineFamily(half=False)
NATURALS = LineFamily(half=True)
FAMILIES = {"Z": INTEGERS, "N": NATURALS}


def get_family(family) -> LineFamily:
    if isinstance(family, LineFamily):
        return family
    try:
        return FAMILIES[str(family)]
    except KeyError:
        raise ValueError(f"unsupported infinite family {family!r}; choose Z or N") from None


@dataclass(frozen=True, eq=False)
class DirichletSpectrum:
    omega: tuple
    values: np.ndarray

    def measure(self) -> SpectralMeasure:
        return from_spectrum(self.values)


def dirichlet_spectrum(g, omega) -> DirichletSpectrum:
    """Spectrum of the normalized Laplacian with Dirichlet condition outside ``omega``.

    ``g`` is a :class:`WeightedGraph` or a :class:`LineFamily` (or its name).
    Degrees are always those of the ambient graph.
    """
    omega = list(dict.fromkeys(int(x) for x in omega))
    if not omega:
        raise ValueError("omega must be nonempty")
    if isinstance(g, WeightedGraph):
        if any(not 0 <= x < g.n for x in omega):
            raise ValueError("omega contains vertices outside the graph")
        idx = np.array(omega)
        w = g.adjacency_matrix()[np.ix_(idx, idx)]
        deg = g.degrees()[idx]
    else:
        fam = get_family(g)
        w = np.array([[fam.weight(x, y) for y in omega] for x in omega])
        deg = np.array([fam.degree(x) for x in omega])
    ev, _ = _eigh(_symmetric_form(w, deg), vectors=False)
    return DirichletSpectrum(tuple(omega), _checked(np.sort(ev), 2.0))


def exhaustion_measures(family, sizes) -> list[SpectralMeasure]:
    """Dirichlet spectral measures along the canonical nested segments."""
    fam = get_family(family)
    sizes = [int(n) for n in sizes]
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly increasing")
    return [dirichlet_spectrum(fam, fam.segment(n)).measure() for n in sizes]


# --- rooted and expected spectral measures -----------------------------------

def _root_weights(vecs: np.ndarray, dist: np.ndarray) -> np.ndarray:
    # weight on eigenvalue i: Σ_o p_o ψ_i(o)²
    return dist @ (vecs**2)


def rooted_spectral_measure(g: WeightedGraph, o: int) -> SpectralMeasure:
    """Spectral measure of (G, o): weight ψ_i(o)² on each eigenvalue λ_i of S."""
    if not 0 <= o < g.n:
        raise IndexError(f"root {o} out of range for n={g.n}")
    if g.degrees()[o] <= 0:
        raise ValueError(f"root {o} is isolated; the rooted measure is undefined")
    dist = np.zeros(g.n)
    dist[o] = 1.0
    vals, vecs = eigenpairs(g)
    return SpectralMeasure.from_atoms(vals, _root_weights(vecs, dist), TOL_MERGE)


def expected_spectral_measure(g: WeightedGraph, root_distribution="uniform") -> SpectralMeasure:
    """Average of rooted measures under a root distribution.

    ``root_distribution`` is ``"uniform"``, a length-N array of probabilities,
    or a mapping vertex -> probability.  It must avoid isolated vertices.
    """
    if isinstance(root_distribution, str):
        if root_distribution != "uniform":
            raise ValueError(f"unknown root distribution {root_distribution!r}")
        dist = np.full(g.n, 1.0 / g.n)
    elif isinstance(root_distribution, dict):
        dist = np.zeros(g.n)
        for x, p in root_distribution.items():
            dist[int(x)] = p
    else:
        dist = np.asarray(root_distribution, dtype=float)
        if dist.shape != (g.n,):
            raise ValueError("root distribution must have one entry per vertex")
    if np.any(dist < 0) or abs(dist.sum() - 1.0) > 1e-12:
        raise ValueError("root distribution must be nonnegative and sum to 1")
    isolated = g.degrees() <= 0
    if np.any(dist[isolated] > 0):
        raise ValueError("root distribution puts mass on an isolated vertex")
    vals, vecs = eigenpairs(g)
    return SpectralMeasure.from_atoms(vals, _root_weights(vecs, dist), TOL_MERGE)


def spectrum_to_csv(values) -> str:
    return "".join(f"{v:.17g}\n" for v in values)


def spectrum_from_csv(text: str) -> np.ndarray:
    vals = [float(line) for line in text.split() if line.strip()]
    return np.array(vals)
