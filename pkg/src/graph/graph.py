from dataclasses import dataclass
from typing import Iterable, Tuple
import numpy as np
from src.exceptions import GraphValidationError

@dataclass(frozen=True)
class Graph:
    """Undirected attributed graph with node labels.

    `edges` holds each unordered pair once as (min, max); build graphs through
    `Graph.from_edges` to get deduplication and canonical ordering.
    """

    n: int
    edges: np.ndarray
    features: np.ndarray
    labels: np.ndarray
    allow_self_loops: bool = False
    name: str = "graph"

    def __post_init__(self):
        if self.n <= 0:
            raise GraphValidationError("Graph must have at least one node")

        edges = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        features = np.array(self.features, dtype=np.float64)
        if features.ndim == 1:
            features = features.reshape(-1, 1)
        labels = np.array(self.labels, dtype=np.int64).reshape(-1)

        if features.shape[0] != self.n:
            raise GraphValidationError(f"features has {features.shape[0]} rows, expected {self.n}")
        if labels.shape[0] != self.n:
            raise GraphValidationError(f"labels has {labels.shape[0]} entries, expected {self.n}")
        if labels.size and labels.min() < 0:
            raise GraphValidationError("class ids must be non-negative")

        if edges.size:
            if edges.min() < 0 or edges.max() >= self.n:
                bad = edges[(edges < 0).any(axis=1) | (edges >= self.n).any(axis=1)][0]
                raise GraphValidationError(f"edge ({bad[0]}, {bad[1]}) out of range for n={self.n}")
            if not self.allow_self_loops and (edges[:, 0] == edges[:, 1]).any():
                raise GraphValidationError("self-loops are not allowed unless allow_self_loops is set")
            canonical = np.sort(edges, axis=1)
            if np.unique(canonical, axis=0).shape[0] != canonical.shape[0]:
                raise GraphValidationError("edge list contains a duplicate unordered pair")

        for array in (edges, features, labels):
            array.setflags(write=False)

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        features: np.ndarray,
        labels: np.ndarray,
        allow_self_loops: bool = False,
        name: str = "graph"
    ) -> "Graph":
        """Build a graph from raw pairs, merging duplicates and both orientations"""
        pairs = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        pairs = pairs.reshape(-1, 2)
        if pairs.size:
            pairs = np.unique(np.sort(pairs, axis=1), axis=0)
        return cls(
            n=n,
            edges=pairs,
            features=features,
            labels=labels,
            allow_self_loops=allow_self_loops,
            name=name
        )

    @property
    def num_features(self) -> int:
        return self.features.shape[1]

    @property
    def num_classes(self) -> int:
        return int(self.labels.max()) + 1 if self.labels.size else 0

    @property
    def num_edges(self) -> int:
        return self.edges.shape[0]

    def __repr__(self):
        return f"<Graph(name={self.name}, n={self.n}, edges={self.num_edges}, d0={self.num_features})>"
