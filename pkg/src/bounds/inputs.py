from dataclasses import dataclass
from typing import Sequence
import numpy as np
from src.basis import BasisMatrix
from src.config import config
from src.exceptions import BoundInputError

C_GC = float(np.sqrt(np.pi / 2.0))

@dataclass(frozen=True)
class BoundInputs:
    """Measured quantities every bound is computed from"""

    basis_matrix: BasisMatrix
    energy: np.ndarray
    C_W: Sequence[float]
    C_theta: Sequence[float]
    n: int
    m: int
    alpha: float = 1.0
    delta: float = config.BOUND_DELTA
    C1: float = config.BOUND_C1
    C2: float = config.BOUND_C2

    def __post_init__(self):
        energy = np.asarray(self.energy, dtype=np.float64).reshape(-1)
        if np.any(energy < 0):
            raise BoundInputError("spectral energy must be non-negative")
        if energy.shape[0] != self.basis_matrix.n:
            raise BoundInputError(f"energy has {energy.shape[0]} entries, V_P has {self.basis_matrix.n} rows")
        if len(self.C_W) != len(self.C_theta):
            raise BoundInputError(f"{len(self.C_W)} weight constants but {len(self.C_theta)} filter constants")
        if len(self.C_W) < 1:
            raise BoundInputError("at least one layer is required")
        if not 0 < self.m < self.n:
            raise BoundInputError(f"need 0 < m < n, got m={self.m}, n={self.n}")
        if not 0.0 < self.delta < 1.0:
            raise BoundInputError(f"delta must lie in (0, 1), got {self.delta}")
        if self.alpha < 0:
            raise BoundInputError("alpha must be non-negative")

        object.__setattr__(self, "energy", energy)
        object.__setattr__(self, "C_W", tuple(float(c) for c in self.C_W))
        object.__setattr__(self, "C_theta", tuple(float(c) for c in self.C_theta))

    @property
    def L(self) -> int:
        return len(self.C_W)

    @property
    def u(self) -> int:
        return self.n - self.m

    @property
    def C_gc(self) -> float:
        return C_GC
