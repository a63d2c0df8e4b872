import numpy as np
import pytest
from src.graph import Graph
from src.network import SpectralContext
from src.services import generate_sbm, make_split, random_graph

@pytest.fixture
def path_graph():
    return Graph.from_edges(3, [(0, 1), (1, 2)], np.arange(6.0).reshape(3, 2), np.array([0, 1, 0]), name="path3")

@pytest.fixture
def triangle_graph():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], np.ones((3, 1)), np.zeros(3, dtype=int), name="triangle")

@pytest.fixture
def random_instance():
    """20-node random graph with its spectral context"""
    graph = random_graph(20, 0.25, 3, 2, seed=3)
    return graph, SpectralContext.from_graph(graph)

@pytest.fixture
def small_sbm():
    return generate_sbm(3, 20, 0.3, 0.03, 4, 2.0, seed=0)

@pytest.fixture
def small_split(small_sbm):
    return make_split(small_sbm.labels, per_class=5, seed=0)

@pytest.fixture
def write_bundle(tmp_path):
    """Writes a graph bundle directory from raw file contents"""
    def _write(edges: str, features: str, labels: str, meta: str = None, name: str = "bundle"):
        root = tmp_path / name
        root.mkdir()
        (root / "edges.tsv").write_text(edges)
        (root / "features.csv").write_text(features)
        (root / "labels.csv").write_text(labels)
        if meta is not None:
            (root / "meta.json").write_text(meta)
        return root
    return _write
