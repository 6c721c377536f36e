"""Atomic probability measures on [0, 2] and exact Wasserstein distances.

In one dimension the p-Wasserstein distance is the L^p distance between
inverse CDFs.  For atomic measures both inverse CDFs are step functions, so
the integral is a finite sum over the merged breakpoints; nothing here
samples or uses quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TOL_MERGE = 1e-8
_MASS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SpectralMeasure:
    """Finitely supported probability measure on [0, 2].

    ``locations`` are strictly increasing; ``weights`` are positive and sum
    to one.  Build instances with :meth:`from_atoms` unless the atoms are
    already sorted and merged.
    """

    locations: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        loc = np.asarray(self.locations, dtype=float).reshape(-1)
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        if loc.shape != w.shape or loc.size == 0:
            raise ValueError("need the same positive number of locations and weights")
        if np.any(np.diff(loc) <= 0):
            raise ValueError("locations must be strictly increasing")
        if loc[0] < 0 or loc[-1] > 2:
            raise ValueError("locations must lie in [0, 2]")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        if abs(w.sum() - 1.0) > _MASS_TOL:
            raise ValueError(f"total mass {w.sum()!r} is not 1")
        loc.flags.writeable = False
        w.flags.writeable = False
        object.__setattr__(self, "locations", loc)
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_atoms(cls, locations, weights, merge_tol: float = TOL_MERGE) -> SpectralMeasure:
        """Sort atoms, drop zero weights and merge locations closer than ``merge_tol``.

        Chains of nearby atoms merge into one atom placed at their weighted
        mean, which keeps the first moment unchanged.
        """
        loc = np.asarray(locations, dtype=float).reshape(-1)
        w = np.asarray(weights, dtype=float).reshape(-1)
        keep = w > 0
        loc, w = loc[keep], w[keep]
        order = np.argsort(loc, kind="stable")
        loc, w = loc[order], w[order]
        if loc.size == 0:
            raise ValueError("measure has no mass")
        starts = np.flatnonzero(np.concatenate(([True], np.diff(loc) > merge_tol)))
        mass = np.add.reduceat(w, starts)
        moment = np.add.reduceat(w * loc, starts)
        # rounding may push a mean outside its own group and onto a neighbour
        merged = np.clip(moment / mass, loc[starts], np.maximum.reduceat(loc, starts))
        merged = np.clip(merged, 0.0, 2.0)
        return cls(merged, mass)

    @classmethod
    def dirac(cls, x: float) -> SpectralMeasure:
        return cls(np.array([x]), np.array([1.0]))

    def __len__(self) -> int:
        return self.locations.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectralMeasure):
            return NotImplemented
        return np.array_equal(self.locations, other.locations) and np.array_equal(
            self.weights, other.weights
        )

    def atoms(self) -> list[tuple[float, float]]:
        return list(zip(self.locations.tolist(), self.weights.tolist()))

    def __repr__(self) -> str:
        body = " + ".join(f"{w:.6g}*δ({x:.6g})" for x, w in self.atoms())
        return f"SpectralMeasure({body})"


@dataclass(frozen=True, eq=False)
class InverseCdf:
    """Right-continuous nondecreasing step function [0, 1] -> [0, 2].

    Takes ``values[i]`` on ``[breakpoints[i], breakpoints[i+1])``; the last
    value also covers x = 1.
    """

    breakpoints: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.breakpoints, dtype=float).reshape(-1)
        v = np.asarray(self.values, dtype=float).reshape(-1)
        if t.size != v.size + 1 or v.size == 0:
            raise ValueError("need len(breakpoints) == len(values) + 1 >= 2")
        if t[0] != 0.0 or t[-1] != 1.0 or np.any(np.diff(t) <= 0):
            raise ValueError("breakpoints must increase strictly from 0 to 1")
        if np.any(np.diff(v) < 0) or v[0] < 0 or v[-1] > 2:
            raise ValueError("values must be nondecreasing within [0, 2]")
        object.__setattr__(self, "breakpoints", t)
        object.__setattr__(self, "values", v)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        idx = np.clip(np.searchsorted(self.breakpoints, x, side="right") - 1, 0, self.values.size - 1)
        return self.values[idx]

    def integral(self) -> float:
        return float(np.dot(self.values, np.diff(self.breakpoints)))


def from_spectrum(eigenvalues, merge_tol: float = TOL_MERGE) -> SpectralMeasure:
    """Uniform measure on a multiset of eigenvalues, near-duplicates merged."""
    ev = np.asarray(eigenvalues, dtype=float).reshape(-1)
    if ev.size == 0:
        raise ValueError("empty spectrum")
    return SpectralMeasure.from_atoms(ev, np.full(ev.size, 1.0 / ev.size), merge_tol)


def inverse_cdf(m: SpectralMeasure) -> InverseCdf:
    """F^{-1}(x) = inf{t : F(t) > x} as a step function."""
    cum = np.minimum(np.cumsum(m.weights), 1.0)
    cum[-1] = 1.0
    lo = np.concatenate(([0.0], cum[:-1]))
    # atoms too light to move the cumulative sum occupy no interval
    keep = cum > lo
    return InverseCdf(np.concatenate(([0.0], cum[keep])), m.locations[keep])


def _lp_steps(f: InverseCdf, g: InverseCdf, p: float) -> float:
    t = np.union1d(f.breakpoints, g.breakpoints)
    left, width = t[:-1], np.diff(t)
    fv = f(left)
    gv = g(left)
    total = float(np.sum(np.abs(fv - gv) ** p * width))
    return total ** (1.0 / p)


def lp_step_distance(f: InverseCdf, g: InverseCdf, p: float = 1.0) -> float:
    """(∫₀¹ |f − g|^p)^{1/p}, exact for step functions."""
    if not p >= 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return _lp_steps(f, g, float(p))


def l1_step_distance(f: InverseCdf, g: InverseCdf) -> float:
    return _lp_steps(f, g, 1.0)


def wasserstein(p: float, mu: SpectralMeasure, nu: SpectralMeasure) -> float:
    """Exact p-Wasserstein distance between two atomic measures on [0, 2]."""
    if not p >= 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return _lp_steps(inverse_cdf(mu), inverse_cdf(nu), float(p))


def first_moment(m: SpectralMeasure) -> float:
    return float(np.dot(m.locations, m.weights))


def spectral_distance(p: float, g, h) -> float:
    """d_p between two finite weighted graphs via their spectral measures."""
    from .spectral import spectrum

    return wasserstein(p, from_spectrum(spectrum(g)), from_spectrum(spectrum(h)))


def vector_distance(a, b, p: float = 1.0) -> float:
    """(mean |a_i − b_i|^p)^{1/p} for two sorted spectra of equal length.

    Equals the Wasserstein distance of the corresponding uniform measures;
    at p = 1 this is ‖a − b‖₁ / N.
    """
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if a.shape != b.shape:
        raise ValueError("spectra must have equal length")
    return float(np.mean(np.abs(a - b) ** p) ** (1.0 / p))


def admissible_two_step(a: float, b: float) -> InverseCdf:
    """0 on [0, a), (2b − 1)/(b − a) on [a, b), 2 on [b, 1]; unit integral.

    ``a == b == 1/2`` gives the single-jump 0/2 function.
    """
    if not (0 <= a <= 0.5 <= b <= 1):
        raise ValueError(f"need 0 <= a <= 1/2 <= b <= 1, got a={a}, b={b}")
    if a == b:
        return InverseCdf(np.array([0.0, 0.5, 1.0]), np.array([0.0, 2.0]))
    h = (2 * b - 1) / (b - a)
    bps, vals = [0.0], []
    for lo, hi, v in ((0.0, a, 0.0), (a, b, h), (b, 1.0, 2.0)):
        if hi > lo:
            bps.append(hi)
            vals.append(v)
    return InverseCdf(np.array(bps), np.array(vals))


def is_rigidity_pair(a1: float, b1: float, a2: float, b2: float, tol: float = 1e-6) -> bool:
    """Whether two admissible 2-step parameters form the extremal pair.

    The extremal pair is the 0/2 jump at 1/2 together with the constant 1
    (a = 0, b = 1), in either order.  Any parameters with a = 1/2 or b = 1/2
    describe the jump function, since the middle height is then 2 or 0.
    """

    def jump(a, b):
        return abs(a - 0.5) <= tol or abs(b - 0.5) <= tol

    def const(a, b):
        return abs(a) <= tol and abs(b - 1) <= tol

    return (jump(a1, b1) and const(a2, b2)) or (const(a1, b1) and jump(a2, b2))


def measure_to_csv(m: SpectralMeasure) -> str:
    return "".join(f"{x:.17g},{w:.17g}\n" for x, w in m.atoms())


def measure_from_csv(text: str) -> SpectralMeasure:
    locs, ws = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("location"):
            continue
        try:
            x, w = (float(s) for s in line.split(","))
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'location,weight'") from None
        locs.append(x)
        ws.append(w)
    return SpectralMeasure.from_atoms(locs, ws, merge_tol=0.0)
