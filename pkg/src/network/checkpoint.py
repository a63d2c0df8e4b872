"""Checkpoint files.

A checkpoint is a NumPy ``.npz`` archive:

    __config__   ModelConfig as a JSON string
    __seed__     int64 scalar, the seed the run was started with
    W_in         (in_dim, hidden_dim) float64
    theta_<l>    (order + 1,) float64, one per filter layer
    W_mid_<l>    (hidden_dim, hidden_dim) float64, one per filter layer
    W_out        (hidden_dim, num_classes) float64

A plain stack stores no W_in or W_out and its W_mid_<l> shapes follow
ModelConfig.layer_dims. All tensors are stored row-major (C order). Optimizer moments are not saved.
"""

from pathlib import Path
from typing import Tuple, Union
import numpy as np
from pydantic import ValidationError
from src.exceptions import StorageError
from src.network.config import ModelConfig
from src.network.params import ModelParams
from src.utils import logger

def save_checkpoint(path: Union[str, Path], params: ModelParams, model: ModelConfig, seed: int) -> Path:
    path = Path(path)
    tensors = {
        name: np.ascontiguousarray(value, dtype=np.float64)
        for name, value in params.as_dict().items()
    }
    try:
        with open(path, "wb") as f:
            np.savez(
                f,
                __config__=np.array(model.model_dump_json()),
                __seed__=np.array(seed, dtype=np.int64),
                **tensors
            )
    except OSError as e:
        raise StorageError(f"Could not write checkpoint {path}: {e}")

    logger.info(f"Checkpoint saved to {path}")
    return path

def load_checkpoint(path: Union[str, Path]) -> Tuple[ModelParams, ModelConfig, int]:
    path = Path(path)
    try:
        with np.load(path, allow_pickle=False) as archive:
            model = ModelConfig.model_validate_json(str(archive["__config__"]))
            seed = int(archive["__seed__"])
            tensors = {name: archive[name] for name in archive.files if not name.startswith("__")}
    except (OSError, KeyError, ValueError, ValidationError) as e:
        raise StorageError(f"Could not read checkpoint {path}: {e}")

    params = ModelParams.from_dict(tensors)
    params.check_shapes(model)
    return params, model, seed
