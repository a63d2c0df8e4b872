import json
import math
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, IO, Iterable, List, Mapping, Optional, Sequence, Union
import numpy as np
import pandas as pd
from src.exceptions import StorageError
from src.utils import logger

FLOAT_FORMAT = "%.17g"

def _frame(records: Iterable[Mapping[str, object]], columns: Sequence[str]) -> pd.DataFrame:
    return pd.DataFrame(list(records), columns=list(columns))

def _to_csv(frame: pd.DataFrame, handle: IO[str], header: bool):
    frame.to_csv(handle, header=header, index=False, float_format=FLOAT_FORMAT, na_rep="nan", lineterminator="\n")

class CsvStream:
    """Results file written row by row, header first"""

    def __init__(self, path: Union[str, Path], columns: Sequence[str]):
        self.path = Path(path)
        self.columns = list(columns)
        self.rows_written = 0
        self._handle: Optional[IO[str]] = None

    def __enter__(self) -> "CsvStream":
        try:
            self._handle = self.path.open("w", encoding="utf-8", newline="")
        except OSError as e:
            raise StorageError(f"Cannot open {self.path}: {e}")
        _to_csv(_frame([], self.columns), self._handle, header=True)
        self._handle.flush()
        return self

    def append(self, record: Mapping[str, object]):
        if self._handle is None:
            raise StorageError(f"{self.path} is not open")
        _to_csv(_frame([record], self.columns), self._handle, header=False)
        self._handle.flush()
        self.rows_written += 1

    def __exit__(self, exc_type, exc, tb):
        if self._handle is not None:
            self._handle.close()
            self._handle = None
        logger.info(f"Wrote {self.rows_written} rows to {self.path}")

def write_csv(path: Union[str, Path], records: Iterable[Mapping[str, object]], columns: Sequence[str]) -> Path:
    path = Path(path)
    frame = _frame(records, columns)
    try:
        with path.open("w", encoding="utf-8", newline="") as handle:
            _to_csv(frame, handle, header=True)
    except OSError as e:
        raise StorageError(f"Cannot write {path}: {e}")
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path

def read_csv(path: Union[str, Path]) -> pd.DataFrame:
    try:
        return pd.read_csv(path, keep_default_na=True, na_values=["nan"])
    except (OSError, pd.errors.ParserError) as e:
        raise StorageError(f"Cannot read {path}: {e}")

def to_jsonable(value):
    """Plain JSON values: numpy scalars unwrapped, non-finite floats become null"""
    if isinstance(value, Mapping):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, Path):
        return str(value)
    return value

def write_json(path: Union[str, Path], payload: Mapping[str, object], seed: int) -> Path:
    path = Path(path)
    document = to_jsonable({**payload, "seed": seed})
    try:
        path.write_text(json.dumps(document, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        raise StorageError(f"Cannot write {path}: {e}")
    logger.info(f"Wrote summary {path}")
    return path

def manifest_lines(command: str, settings: Mapping[str, object], seed: int, timestamp: datetime = None) -> List[str]:
    timestamp = timestamp or datetime.now(timezone.utc)
    entries: Dict[str, object] = {**settings, "command": command, "seed": seed}
    lines = [f"{key}={_manifest_value(entries[key])}" for key in sorted(entries)]
    lines.append(f"timestamp={timestamp.strftime('%Y-%m-%dT%H:%M:%SZ')}")
    return lines

def _manifest_value(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(_manifest_value(item) for item in value)
    if value is None:
        return ""
    return str(value)

def write_manifest(out_dir: Union[str, Path], command: str, settings: Mapping[str, object], seed: int) -> Path:
    """key=value manifest of the resolved settings; the only timestamped artefact"""
    path = Path(out_dir) / "manifest.txt"
    try:
        path.write_text("\n".join(manifest_lines(command, settings, seed)) + "\n", encoding="utf-8")
    except OSError as e:
        raise StorageError(f"Cannot write {path}: {e}")
    return path

def read_manifest(path: Union[str, Path]) -> Dict[str, str]:
    entries = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if "=" in line:
            key, value = line.split("=", 1)
            entries[key] = value
    return entries
