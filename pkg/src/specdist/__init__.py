"""Spectral distances between weighted graphs."""

from .graph import (
    GraphFormatError,
    WeightedGraph,
    barabasi_albert,
    complete,
    complete_bipartite,
    connected_components,
    cycle_graph,
    degree,
    from_edge_list,
    hypercube,
    path_graph,
    to_edge_list,
)
from .measure import (
    InverseCdf,
    SpectralMeasure,
    first_moment,
    from_spectrum,
    inverse_cdf,
    spectral_distance,
    wasserstein,
)
from .spectral import (
    dirichlet_spectrum,
    exhaustion_measures,
    expected_spectral_measure,
    normalized_laplacian,
    rooted_spectral_measure,
    spectrum,
)

__version__ = "0.1.0"
