import numpy as np
from src.exceptions import GraphValidationError
from src.graph.graph import Graph
from src.utils import logger

def adjacency_matrix(graph: Graph) -> np.ndarray:
    """Dense 0/1 adjacency; a self-loop contributes 1 to its node's degree"""
    if graph.n <= 0:
        raise GraphValidationError("Cannot build an adjacency matrix for an empty graph")

    A = np.zeros((graph.n, graph.n), dtype=np.float64)
    if graph.num_edges:
        u, v = graph.edges[:, 0], graph.edges[:, 1]
        A[u, v] = 1.0
        A[v, u] = 1.0
    return A

def build_normalized_adjacency(graph: Graph) -> np.ndarray:
    """Symmetric normalization D^{-1/2} A D^{-1/2}.

    Isolated nodes keep an all-zero row and column.
    """
    A = adjacency_matrix(graph)
    degrees = A.sum(axis=1)

    inv_sqrt = np.zeros_like(degrees)
    connected = degrees > 0
    inv_sqrt[connected] = 1.0 / np.sqrt(degrees[connected])

    isolated = int((~connected).sum())
    if isolated:
        logger.debug(f"{graph.name}: {isolated} isolated nodes get zero rows in the normalized adjacency")

    A_hat = inv_sqrt[:, None] * A * inv_sqrt[None, :]
    # exact symmetry for the eigensolver
    return 0.5 * (A_hat + A_hat.T)

def infinity_norm(matrix: np.ndarray) -> float:
    """Maximum absolute row sum"""
    return float(np.abs(matrix).sum(axis=1).max())
