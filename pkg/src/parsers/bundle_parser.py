import json
from pathlib import Path
from typing import List, Tuple, Union
import numpy as np
import pandas as pd
from src.exceptions import BundleFormatError, GraphValidationError
from src.graph import Graph
from src.utils import logger

class BundleParser:
    """Reads a graph bundle directory: edges.tsv, features.csv, labels.csv and optional meta.json"""

    EDGES_FILE = "edges.tsv"
    FEATURES_FILE = "features.csv"
    LABELS_FILE = "labels.csv"
    META_FILE = "meta.json"

    def __init__(self, allow_self_loops: bool = False):
        self.allow_self_loops = allow_self_loops

    def parse(self, path: Union[str, Path]) -> Graph:
        root = Path(path)
        if not root.is_dir():
            raise BundleFormatError(str(root), 0, "graph bundle must be a directory")

        features = self._parse_features(root / self.FEATURES_FILE)
        labels = self._parse_labels(root / self.LABELS_FILE)
        n = features.shape[0]

        if labels.shape[0] != n:
            raise BundleFormatError(self.LABELS_FILE, labels.shape[0], f"{labels.shape[0]} labels for {n} feature rows")

        meta = self._parse_meta(root / self.META_FILE)
        if "n" in meta and int(meta["n"]) != n:
            raise BundleFormatError(self.META_FILE, 1, f"meta n={meta['n']} but features has {n} rows")
        if "d0" in meta and int(meta["d0"]) != features.shape[1]:
            raise BundleFormatError(self.META_FILE, 1, f"meta d0={meta['d0']} but features has {features.shape[1]} columns")

        edges = self._parse_edges(root / self.EDGES_FILE, n)
        name = str(meta.get("name", root.name))

        try:
            graph = Graph.from_edges(
                n=n,
                edges=edges,
                features=features,
                labels=labels,
                allow_self_loops=self.allow_self_loops,
                name=name
            )
        except GraphValidationError as e:
            raise BundleFormatError(str(root), 0, str(e))

        logger.info(f"Loaded bundle {name}: n={graph.n}, edges={graph.num_edges}, d0={graph.num_features}")
        return graph

    def _read_lines(self, path: Path) -> List[str]:
        if not path.exists():
            raise BundleFormatError(path.name, 0, "file is missing")
        return path.read_text(encoding="utf-8").splitlines()

    def _parse_edges(self, path: Path, n: int) -> List[Tuple[int, int]]:
        edges = []
        for line_number, line in enumerate(self._read_lines(path), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue

            tokens = stripped.split()
            if len(tokens) != 2:
                raise BundleFormatError(path.name, line_number, f"expected 'u<TAB>v', got '{stripped}'")
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise BundleFormatError(path.name, line_number, f"non-integer node id in '{stripped}'")

            if not (0 <= u < n and 0 <= v < n):
                raise BundleFormatError(path.name, line_number, f"edge ({u}, {v}) out of range for n={n}")
            if u == v and not self.allow_self_loops:
                raise BundleFormatError(path.name, line_number, f"self-loop on node {u}")
            edges.append((u, v))
        return edges

    def _parse_table(self, path: Path) -> pd.DataFrame:
        if not path.exists():
            raise BundleFormatError(path.name, 0, "file is missing")
        try:
            return pd.read_csv(path, header=None, dtype=str, skip_blank_lines=True)
        except pd.errors.EmptyDataError:
            raise BundleFormatError(path.name, 1, "file is empty")
        except pd.errors.ParserError as e:
            raise BundleFormatError(path.name, 0, f"malformed table: {e}")

    def _first_bad_row(self, numeric: pd.DataFrame) -> int:
        bad = numeric.isna().any(axis=1).to_numpy()
        return int(np.argmax(bad)) + 1

    def _parse_features(self, path: Path) -> np.ndarray:
        frame = self._parse_table(path)
        numeric = frame.apply(lambda column: pd.to_numeric(column.str.strip(), errors="coerce"))
        if numeric.isna().to_numpy().any():
            line = self._first_bad_row(numeric)
            raise BundleFormatError(path.name, line, "non-numeric or missing feature value")
        return numeric.to_numpy(dtype=np.float64)

    def _parse_labels(self, path: Path) -> np.ndarray:
        frame = self._parse_table(path)
        if frame.shape[1] != 1:
            raise BundleFormatError(path.name, 1, f"expected one label per line, got {frame.shape[1]} columns")

        numeric = pd.to_numeric(frame[0].str.strip(), errors="coerce")
        invalid = numeric.isna() | (numeric < 0) | (numeric != numeric.round())
        if invalid.any():
            line = int(np.argmax(invalid.to_numpy())) + 1
            raise BundleFormatError(path.name, line, f"invalid class id '{frame[0].iloc[line - 1]}'")
        return numeric.to_numpy(dtype=np.int64)

    def _parse_meta(self, path: Path) -> dict:
        if not path.exists():
            return {}
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise BundleFormatError(path.name, e.lineno, f"invalid JSON: {e.msg}")

def load_graph_bundle(path: Union[str, Path], allow_self_loops: bool = False) -> Graph:
    return BundleParser(allow_self_loops=allow_self_loops).parse(path)
