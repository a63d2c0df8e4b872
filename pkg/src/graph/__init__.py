from .graph import Graph
from .adjacency import adjacency_matrix, build_normalized_adjacency, infinity_norm
from .spectral import SpectralDecomposition, eigendecompose, gft

__all__ = [
    "Graph",
    "adjacency_matrix",
    "build_normalized_adjacency",
    "infinity_norm",
    "SpectralDecomposition",
    "eigendecompose",
    "gft",
]
