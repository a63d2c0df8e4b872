"""Eigendecomposition of the normalized adjacency and the graph Fourier transform."""

from dataclasses import dataclass
from typing import Literal
import numpy as np
import scipy.linalg
from src.exceptions import ConvergenceError, GraphValidationError, ShapeMismatchError
from src.utils import logger

SYMMETRY_TOLERANCE = 1e-12
RESIDUAL_TOLERANCE = 1e-8
SPECTRUM_SLACK = 1e-9

Direction = Literal["forward", "inverse"]

@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenpairs of a symmetric matrix, ascending, with a fixed sign convention"""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual: float
    orthogonality_error: float

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

def _fix_signs(U: np.ndarray) -> np.ndarray:
    # largest-magnitude entry of every column positive; argmax picks the lowest index on ties
    pivots = np.argmax(np.abs(U), axis=0)
    signs = np.sign(U[pivots, np.arange(U.shape[1])])
    signs[signs == 0] = 1.0
    return U * signs[None, :]

def eigendecompose(matrix: np.ndarray, clamp: bool = True) -> SpectralDecomposition:
    """Full symmetric eigendecomposition.

    Uses LAPACK's ``syev`` driver (Householder tridiagonalization followed by
    implicit QL/QR). With ``clamp`` the spectrum must sit in [-1, 1] up to
    ``SPECTRUM_SLACK`` and is clamped onto it, as for a normalized adjacency.
    """
    A = np.asarray(matrix, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeMismatchError(f"Expected a square matrix, got shape {A.shape}")
    if A.shape[0] == 0:
        raise GraphValidationError("Cannot decompose an empty matrix")

    asymmetry = float(np.max(np.abs(A - A.T)))
    if asymmetry > SYMMETRY_TOLERANCE:
        raise ShapeMismatchError(f"Matrix is not symmetric (max |A - A^T| = {asymmetry:.3e})")

    try:
        eigenvalues, U = scipy.linalg.eigh(A, driver="ev", check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceError(f"Symmetric eigensolver failed: {e}", residual=float("inf"))

    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    U = _fix_signs(U[:, order])

    residual = float(np.max(np.abs(A @ U - U * eigenvalues[None, :])))
    orthogonality = float(np.max(np.abs(U.T @ U - np.eye(A.shape[0]))))
    if residual > RESIDUAL_TOLERANCE or orthogonality > RESIDUAL_TOLERANCE:
        raise ConvergenceError(
            f"Eigendecomposition did not reach tolerance (orthogonality={orthogonality:.3e})",
            residual=residual
        )

    if clamp:
        excursion = float(np.max(np.abs(eigenvalues)) - 1.0)
        if excursion > SPECTRUM_SLACK:
            raise GraphValidationError(f"Eigenvalue outside [-1, 1] by {excursion:.3e}; not a normalized adjacency")
        if excursion > 0:
            logger.debug(f"Clamping eigenvalues back into [-1, 1] (excursion {excursion:.2e})")
        eigenvalues = np.clip(eigenvalues, -1.0, 1.0)

    eigenvalues.setflags(write=False)
    U.setflags(write=False)
    return SpectralDecomposition(
        eigenvalues=eigenvalues,
        eigenvectors=U,
        residual=residual,
        orthogonality_error=orthogonality
    )

def gft(decomp: SpectralDecomposition, X: np.ndarray, direction: Direction = "forward") -> np.ndarray:
    """Forward (U^T X) or inverse (U X) graph Fourier transform"""
    X = np.asarray(X, dtype=np.float64)
    if X.shape[0] != decomp.n:
        raise ShapeMismatchError(f"Signal has {X.shape[0]} rows, decomposition has {decomp.n}")

    U = decomp.eigenvectors
    if direction == "forward":
        return U.T @ X
    if direction == "inverse":
        return U @ X
    raise ValueError(f"Unknown GFT direction: {direction}")
