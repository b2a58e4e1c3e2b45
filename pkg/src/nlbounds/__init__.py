"""Normalized-Laplacian energy indices and bounds on them."""

from .bounds import eigen_localizers
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _errors_all
from .generators import GenSpec, derive_seed, generate
from .graph import (
    DegreeSequence,
    Graph,
    degree_sequence,
    from_edge_list,
    is_bipartite,
    is_connected,
    is_graphical,
    parse_degree_sequence,
    parse_edge_list,
    read_edge_list,
)
from .indices import IndexValues, compute_indices, lee, ne, nee, randic_minus_one
from .randic import (
    classify_pendant_sequence,
    randic_bounds_classical,
    randic_bounds_majorization,
    randic_extremals,
)
from .report import BoundReport, evaluate_bounds
from .spectra import Spectrum, eigenvalues_symmetric, graph_spectrum, spectrum_identities, normalized_laplacian

__version__ = "0.1.0"

__all__ = [
    "DegreeSequence", "Graph", "degree_sequence", "from_edge_list", "is_bipartite",
    "is_connected", "is_graphical", "parse_degree_sequence", "parse_edge_list",
    "read_edge_list", "Spectrum", "eigenvalues_symmetric", "graph_spectrum", "spectrum_identities",
    "normalized_laplacian", "IndexValues", "compute_indices", "nee", "lee", "ne",
    "randic_minus_one", "classify_pendant_sequence", "randic_bounds_classical",
    "randic_bounds_majorization", "randic_extremals", "eigen_localizers", "BoundReport",
    "evaluate_bounds", "GenSpec", "derive_seed", "generate", *_errors_all,
]
