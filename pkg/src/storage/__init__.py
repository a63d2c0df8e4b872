from .results_storage import (
    CsvStream,
    manifest_lines,
    read_csv,
    read_manifest,
    to_jsonable,
    write_csv,
    write_json,
    write_manifest,
)
from .sweep_storage import SweepStorage

__all__ = [
    "CsvStream",
    "manifest_lines",
    "read_csv",
    "read_manifest",
    "to_jsonable",
    "write_csv",
    "write_json",
    "write_manifest",
    "SweepStorage",
]
