from dataclasses import dataclass
import numpy as np
from src.basis import Basis, BasisLike, BasisMatrix, vandermonde
from src.graph import Graph, SpectralDecomposition, build_normalized_adjacency, eigendecompose

@dataclass(frozen=True)
class SpectralContext:
    """Read-only spectral data shared by every run on one graph"""

    graph: Graph
    adjacency: np.ndarray
    decomposition: SpectralDecomposition

    @classmethod
    def from_graph(cls, graph: Graph) -> "SpectralContext":
        adjacency = build_normalized_adjacency(graph)
        adjacency.setflags(write=False)
        return cls(graph=graph, adjacency=adjacency, decomposition=eigendecompose(adjacency))

    def basis_matrix(self, basis: BasisLike, order: int) -> BasisMatrix:
        return vandermonde(Basis.parse(basis), order, self.decomposition.eigenvalues)
