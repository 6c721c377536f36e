import math

import numpy as np
import pytest

from specdist.closed_forms import (
    d1_bipartite_pair,
    d1_complete_pair,
    d1_cube_pair,
    d1_cycle_pair,
    d1_path_pair,
    spectrum_bipartite,
    spectrum_complete,
    spectrum_cube,
    spectrum_cycle,
    spectrum_path,
)
from specdist.graph import complete, complete_bipartite, cycle_graph, hypercube, path_graph
from specdist.measure import spectral_distance
from specdist.spectral import spectrum


def split(n):
    return complete_bipartite((n + 1) // 2, n // 2)


# --- spectra -----------------------------------------------------------------

def test_spectrum_examples():
    np.testing.assert_allclose(spectrum_complete(2), [0, 2])
    np.testing.assert_allclose(spectrum_complete(5), [0, 1.25, 1.25, 1.25, 1.25])
    assert spectrum_complete(1).tolist() == [1.0]
    np.testing.assert_allclose(spectrum_bipartite(1, 1), [0, 2])
    np.testing.assert_allclose(spectrum_bipartite(2, 3), [0, 1, 1, 1, 2])
    np.testing.assert_allclose(spectrum_cube(1), [0, 2])
    np.testing.assert_allclose(spectrum_cube(3), [0, 2 / 3, 2 / 3, 2 / 3, 4 / 3, 4 / 3, 4 / 3, 2])
    np.testing.assert_allclose(spectrum_path(2), [0, 2], atol=1e-15)
    np.testing.assert_allclose(spectrum_path(3), [0, 1, 2], atol=1e-15)
    np.testing.assert_allclose(spectrum_path(4), [0, 0.5, 1.5, 2], atol=1e-15)
    np.testing.assert_allclose(spectrum_cycle(4), [0, 1, 1, 2], atol=1e-15)
    np.testing.assert_allclose(spectrum_cycle(3), spectrum_complete(3), atol=1e-15)


@pytest.mark.parametrize("fn, arg, n", [
    (spectrum_complete, (3,), 3), (spectrum_bipartite, (4, 7), 11), (spectrum_cube, (3,), 8),
    (spectrum_path, (9,), 9), (spectrum_cycle, (10,), 10),
])
def test_trace(fn, arg, n):
    ev = fn(*arg)
    assert ev.size == n and abs(ev.sum() - n) <= 1e-12


def test_bad_sizes_rejected():
    for fn, arg in [(spectrum_complete, 0), (spectrum_cube, 0), (spectrum_path, 1), (spectrum_cycle, 2),
                    (d1_cube_pair, 0), (d1_path_pair, 2), (d1_cycle_pair, 2)]:
        with pytest.raises(ValueError):
            fn(arg)
    with pytest.raises(ValueError):
        d1_complete_pair(7, 5)
    with pytest.raises(ValueError):
        spectrum_bipartite(0, 3)


@pytest.mark.parametrize("n", [2, 3, 10, 57, 200, 500])
def test_complete_spectrum_matches_solver(n):
    np.testing.assert_allclose(spectrum_complete(n), spectrum(complete(n)), atol=1e-9)


@pytest.mark.parametrize("a, b", [(1, 1), (1, 5), (3, 3), (20, 31), (250, 250)])
def test_bipartite_spectrum_matches_solver(a, b):
    np.testing.assert_allclose(spectrum_bipartite(a, b), spectrum(complete_bipartite(a, b)), atol=1e-9)


@pytest.mark.parametrize("d", range(1, 11))
def test_cube_spectrum_matches_solver(d):
    np.testing.assert_allclose(spectrum_cube(d), spectrum(hypercube(d)), atol=1e-9)


@pytest.mark.parametrize("n", [2, 3, 4, 17, 100, 333, 500])
def test_path_spectrum_matches_solver(n):
    np.testing.assert_allclose(spectrum_path(n), spectrum(path_graph(n)), atol=1e-9)


@pytest.mark.parametrize("n", [3, 4, 5, 18, 101, 334, 500])
def test_cycle_spectrum_matches_solver(n):
    np.testing.assert_allclose(spectrum_cycle(n), spectrum(cycle_graph(n)), atol=1e-9)


def test_path_spectra_strictly_interlace():
    for n in range(2, 80):
        a, b = spectrum_path(n), spectrum_path(n + 1)
        # 0 = b_0 = a_0 and a_{n-1} = b_n = 2; interior values alternate strictly
        assert np.all(b[1:n] < a[1:n] + 1e-15) and np.all(a[:n - 1] < b[1:n])


# --- pairwise d_1 ------------------------------------------------------------

def test_pair_examples():
    assert d1_complete_pair(5, 7) == pytest.approx(2 / 15, abs=1e-15)
    assert d1_complete_pair(6, 6) == 0
    assert d1_bipartite_pair(4, 6) == pytest.approx(1 / 6, abs=1e-15)
    assert d1_bipartite_pair(10, 11) == pytest.approx(2 / 110, abs=1e-15)
    assert d1_bipartite_pair(9, 9) == 0
    assert d1_cube_pair(3) == 0.25
    assert d1_cube_pair(1) == 0.5
    assert d1_path_pair(3) == pytest.approx(0.25, abs=1e-12)
    assert d1_path_pair(4) == pytest.approx((1 + 2 * math.sqrt(2)) / 20, abs=1e-12)
    assert d1_cycle_pair(4) == pytest.approx(0.3118034, abs=1e-6)


def test_small_pairs_against_pipeline():
    assert spectral_distance(1, hypercube(1), hypercube(2)) == pytest.approx(0.5, abs=1e-12)
    assert spectral_distance(1, path_graph(3), path_graph(4)) == pytest.approx(0.25, abs=1e-12)
    assert spectral_distance(1, cycle_graph(3), cycle_graph(4)) == pytest.approx(d1_cycle_pair(3), abs=1e-12)
    # hand evaluation of the C_3/C_4 transport: 5/12
    assert d1_cycle_pair(3) == pytest.approx(5 / 12, abs=1e-12)


def test_complete_oracle_agreement():
    for n in range(2, 40):
        for m in (n + 1, n + 7, 2 * n):
            assert abs(spectral_distance(1, complete(n), complete(m)) - d1_complete_pair(n, m)) <= 1e-8


def test_bipartite_oracle_agreement():
    for n in range(2, 40):
        for m in (n + 1, n + 6, 2 * n + 1):
            assert abs(spectral_distance(1, split(n), split(m)) - d1_bipartite_pair(n, m)) <= 1e-8


def test_bipartite_oracle_ignores_split():
    assert abs(spectral_distance(1, complete_bipartite(1, 9), complete_bipartite(6, 7)) - d1_bipartite_pair(10, 13)) \
        <= 1e-8


@pytest.mark.parametrize("d", range(1, 9))
def test_cube_oracle_agreement(d):
    assert abs(spectral_distance(1, hypercube(d), hypercube(d + 1)) - d1_cube_pair(d)) <= 1e-8


def test_path_oracle_agreement():
    for n in range(3, 121):
        assert abs(spectral_distance(1, path_graph(n), path_graph(n + 1)) - d1_path_pair(n)) <= 1e-8


def test_cycle_oracle_agreement():
    for n in range(3, 121):
        assert abs(spectral_distance(1, cycle_graph(n), cycle_graph(n + 1)) - d1_cycle_pair(n)) <= 1e-8


# --- asymptotics -------------------------------------------------------------

def test_complete_rate():
    for n in range(2, 300):
        assert d1_complete_pair(n, n + 1) * n**2 == pytest.approx(2, rel=1e-14)


def test_cube_rate():
    for d in range(1, 60):
        assert d1_cube_pair(d) * (d + 1) == pytest.approx(1, rel=1e-15)


def test_path_rate():
    for n in range(10, 501):
        assert 0.5 <= d1_path_pair(n) * n <= 4
