from dataclasses import dataclass
from typing import Dict, List
import numpy as np
from src.config import config
from src.exceptions import SplitError

@dataclass(frozen=True)
class Split:
    """Transductive node split; every index array is sorted"""

    train_idx: np.ndarray
    val_idx: np.ndarray
    test_idx: np.ndarray
    seed: int

    @property
    def num_labelled(self) -> int:
        return int(self.train_idx.size)

    def sizes(self) -> Dict[str, int]:
        return {"train": int(self.train_idx.size), "val": int(self.val_idx.size), "test": int(self.test_idx.size)}

def make_split(
    labels: np.ndarray,
    per_class: int = None,
    val_frac: float = None,
    seed: int = 0
) -> Split:
    """Stratified train set of per_class nodes per class; the rest goes val_frac / (1 - val_frac)"""
    per_class = config.TRAIN_PER_CLASS if per_class is None else per_class
    val_frac = config.VAL_FRACTION if val_frac is None else val_frac
    labels = np.asarray(labels, dtype=np.int64).reshape(-1)

    if per_class <= 0:
        raise SplitError(f"per_class must be positive, got {per_class}")
    if not 0.0 <= val_frac <= 1.0:
        raise SplitError(f"val_frac must lie in [0, 1], got {val_frac}")
    if labels.size == 0:
        raise SplitError("cannot split an empty label vector")

    rng = np.random.default_rng(seed)
    train: List[np.ndarray] = []
    for cls in np.unique(labels):
        members = np.flatnonzero(labels == cls)
        if members.size < per_class:
            raise SplitError(f"class {cls} has {members.size} nodes, needs at least {per_class}")
        train.append(rng.choice(members, size=per_class, replace=False))

    train_idx = np.sort(np.concatenate(train))
    rest = np.setdiff1d(np.arange(labels.size), train_idx)
    rest = rng.permutation(rest)

    n_val = int(np.floor(rest.size * val_frac + 1e-9))
    val_idx = np.sort(rest[:n_val])
    test_idx = np.sort(rest[n_val:])

    return Split(train_idx=train_idx, val_idx=val_idx, test_idx=test_idx, seed=seed)
