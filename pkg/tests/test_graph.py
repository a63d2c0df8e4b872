import numpy as np
import pytest
from src.exceptions import GraphValidationError, ShapeMismatchError
from src.graph import (
    Graph,
    adjacency_matrix,
    build_normalized_adjacency,
    eigendecompose,
    gft,
    infinity_norm,
)
from src.services import random_graph

def test_path_graph_normalized_adjacency(path_graph):
    A_hat = build_normalized_adjacency(path_graph)
    assert A_hat[0, 1] == pytest.approx(1 / np.sqrt(2))
    assert A_hat[1, 2] == pytest.approx(1 / np.sqrt(2))
    assert np.all(np.diag(A_hat) == 0)
    assert np.array_equal(A_hat, A_hat.T)

def test_single_isolated_node_gives_zero_matrix():
    graph = Graph(n=1, edges=np.empty((0, 2)), features=np.zeros((1, 1)), labels=[0])
    assert np.array_equal(build_normalized_adjacency(graph), np.zeros((1, 1)))

def test_triangle_off_diagonal_entries(triangle_graph):
    A_hat = build_normalized_adjacency(triangle_graph)
    off_diagonal = A_hat[~np.eye(3, dtype=bool)]
    assert np.allclose(off_diagonal, 0.5)

def test_isolated_nodes_keep_zero_rows():
    graph = Graph.from_edges(4, [(0, 1)], np.zeros((4, 1)), np.zeros(4))
    A_hat = build_normalized_adjacency(graph)
    assert np.all(A_hat[2:] == 0)
    assert np.all(A_hat[:, 2:] == 0)

def test_from_edges_merges_duplicates_and_orientations():
    graph = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1), (2, 1)], np.zeros((3, 1)), np.zeros(3))
    assert graph.num_edges == 2
    assert adjacency_matrix(graph).sum() == 4

@pytest.mark.parametrize("edges, message", [
    ([(0, 3)], "out of range"),
    ([(1, 1)], "self-loops"),
    ([(0, 1), (1, 0)], "duplicate"),
])
def test_graph_rejects_invalid_edges(edges, message):
    with pytest.raises(GraphValidationError, match=message):
        Graph(n=3, edges=np.array(edges), features=np.zeros((3, 1)), labels=np.zeros(3))

def test_graph_rejects_row_mismatch_and_empty_graph():
    with pytest.raises(GraphValidationError):
        Graph(n=3, edges=np.empty((0, 2)), features=np.zeros((2, 1)), labels=np.zeros(3))
    with pytest.raises(GraphValidationError):
        Graph(n=0, edges=np.empty((0, 2)), features=np.zeros((0, 1)), labels=np.zeros(0))

def test_self_loops_allowed_when_requested():
    graph = Graph(n=2, edges=np.array([[0, 0], [0, 1]]), features=np.zeros((2, 1)), labels=[0, 1], allow_self_loops=True)
    # the loop counts once towards node 0's degree
    assert adjacency_matrix(graph)[0].sum() == 2

def test_graph_copies_and_freezes_inputs():
    features = np.zeros((2, 1))
    graph = Graph(n=2, edges=np.array([[0, 1]]), features=features, labels=[0, 1])
    features[0, 0] = 5.0
    assert graph.features[0, 0] == 0.0
    with pytest.raises(ValueError):
        graph.features[0, 0] = 1.0

def test_path_graph_spectrum(path_graph):
    decomp = eigendecompose(build_normalized_adjacency(path_graph))
    assert np.allclose(decomp.eigenvalues, [-1.0, 0.0, 1.0], atol=1e-10)

def test_edgeless_graph_spectrum_is_zero():
    graph = Graph(n=3, edges=np.empty((0, 2)), features=np.zeros((3, 1)), labels=np.zeros(3))
    decomp = eigendecompose(build_normalized_adjacency(graph))
    assert np.allclose(decomp.eigenvalues, 0.0)
    magnitudes = np.abs(decomp.eigenvectors)
    assert np.allclose(np.sort(magnitudes, axis=0), [[0, 0, 0], [0, 0, 0], [1, 1, 1]])

@pytest.mark.parametrize("seed", range(5))
def test_random_graph_decomposition_invariants(seed):
    graph = random_graph(50, 0.1, 1, 2, seed=seed)
    A_hat = build_normalized_adjacency(graph)
    decomp = eigendecompose(A_hat)
    U, lam = decomp.eigenvectors, decomp.eigenvalues

    assert np.max(np.abs(A_hat @ U - U * lam)) <= 1e-8
    assert np.max(np.abs(U.T @ U - np.eye(50))) <= 1e-8
    assert np.all(np.diff(lam) >= 0)
    assert lam.min() >= -1.0 and lam.max() <= 1.0

@pytest.mark.parametrize("seed", range(5))
def test_small_spectra_match_reference_solver(seed):
    graph = random_graph(8, 0.4, 1, 2, seed=seed)
    A_hat = build_normalized_adjacency(graph)
    reference = np.sort(np.linalg.eigvalsh(A_hat))
    assert np.allclose(eigendecompose(A_hat).eigenvalues, reference, atol=1e-10)

def test_eigenvector_sign_convention(random_instance):
    _, context = random_instance
    U = context.decomposition.eigenvectors
    pivots = np.argmax(np.abs(U), axis=0)
    assert np.all(U[pivots, np.arange(U.shape[1])] > 0)

def test_eigendecompose_rejects_asymmetric_and_non_square():
    with pytest.raises(ShapeMismatchError):
        eigendecompose(np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(ShapeMismatchError):
        eigendecompose(np.zeros((2, 3)))

def test_eigendecompose_rejects_spectrum_outside_unit_interval():
    with pytest.raises(GraphValidationError):
        eigendecompose(np.diag([2.0, 0.0]))
    assert eigendecompose(np.diag([2.0, 0.0]), clamp=False).eigenvalues[-1] == pytest.approx(2.0)

def test_gft_round_trip_and_parseval(random_instance):
    graph, context = random_instance
    X = np.random.default_rng(0).standard_normal((graph.n, 3))
    X_hat = gft(context.decomposition, X, "forward")

    assert np.allclose(gft(context.decomposition, X_hat, "inverse"), X, atol=1e-10)
    assert np.linalg.norm(X_hat) == pytest.approx(np.linalg.norm(X), abs=1e-10)

def test_gft_of_eigenvectors_is_identity(random_instance):
    graph, context = random_instance
    U = context.decomposition.eigenvectors
    assert np.allclose(gft(context.decomposition, U, "forward"), np.eye(graph.n), atol=1e-10)

def test_gft_rejects_wrong_row_count(random_instance):
    _, context = random_instance
    with pytest.raises(ShapeMismatchError):
        gft(context.decomposition, np.zeros((3, 2)))

def test_infinity_norm():
    assert infinity_norm(np.array([[1.0, -2.0], [0.5, 0.5]])) == 3.0
