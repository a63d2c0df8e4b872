from dataclasses import dataclass
import numpy as np
from src.basis.polynomials import Basis, BasisLike, basis_values

@dataclass(frozen=True)
class BasisMatrix:
    """Generalized Vandermonde matrix V_P with (V_P)_{ik} = P_k(lambda_i)"""

    values: np.ndarray
    row_norms: np.ndarray
    two_inf_norm: float
    basis: Basis
    order: int

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def response(self, theta: np.ndarray) -> np.ndarray:
        """Frequency response V_P theta"""
        return self.values @ theta

def vandermonde(basis: BasisLike, K: int, eigenvalues: np.ndarray) -> BasisMatrix:
    basis = Basis.parse(basis)
    values = basis_values(basis, K, eigenvalues)
    row_norms = np.sqrt(np.sum(values ** 2, axis=1))

    values.setflags(write=False)
    row_norms.setflags(write=False)
    return BasisMatrix(
        values=values,
        row_norms=row_norms,
        two_inf_norm=float(row_norms.max()),
        basis=basis,
        order=K
    )
