"""Polynomial filter bases on [-1, 1] and their amplification profiles."""

from dataclasses import dataclass
from enum import Enum
from typing import Union
import numpy as np
from src.config import config
from src.exceptions import BasisDomainError

DOMAIN_SLACK = 1e-9

class BasisKind(str, Enum):
    MONOMIAL = "monomial"
    CHEBYSHEV = "chebyshev"
    LEGENDRE = "legendre"
    BERNSTEIN = "bernstein"

@dataclass(frozen=True)
class Basis:
    kind: BasisKind
    rescaled: bool = False

    @classmethod
    def parse(cls, value: Union["Basis", BasisKind, str], rescaled: bool = False) -> "Basis":
        if isinstance(value, Basis):
            return Basis(kind=value.kind, rescaled=True) if rescaled else value
        if isinstance(value, BasisKind):
            return cls(kind=value, rescaled=rescaled)
        try:
            return cls(kind=BasisKind(str(value).lower()), rescaled=rescaled)
        except ValueError:
            raise BasisDomainError(f"Unknown basis '{value}', expected one of {config.BASES}")

    @property
    def name(self) -> str:
        return f"{self.kind.value}{'-rescaled' if self.rescaled else ''}"

BasisLike = Union[Basis, BasisKind, str]

def max_amplification(kind: BasisLike, K: int) -> float:
    """Analytic max of M_K on [-1, 1], attained at the endpoints"""
    basis = Basis.parse(kind)
    _check_order(K)
    return 1.0 if basis.kind is BasisKind.BERNSTEIN else float(K + 1)

def rescale_divisor(basis: BasisLike, K: int) -> float:
    """Divisor that brings max M_K to 1 when the basis is rescaled"""
    basis = Basis.parse(basis)
    if not basis.rescaled:
        return 1.0
    return float(np.sqrt(max_amplification(basis, K)))

def _check_order(K: int):
    if K < 0:
        raise BasisDomainError(f"Polynomial order must be non-negative, got {K}")

def _clamp_domain(xs: np.ndarray) -> np.ndarray:
    if xs.size and np.max(np.abs(xs)) > 1.0 + DOMAIN_SLACK:
        raise BasisDomainError(f"Basis evaluated outside [-1, 1] (max |x| = {np.max(np.abs(xs)):.6g})")
    return np.clip(xs, -1.0, 1.0)

def _binomials(K: int) -> np.ndarray:
    coefficients = np.ones(K + 1)
    for k in range(K):
        coefficients[k + 1] = coefficients[k] * (K - k) / (k + 1)
    return coefficients

def basis_values(basis: BasisLike, K: int, xs: np.ndarray) -> np.ndarray:
    """Values P_k(x) for every x in `xs`, shape (len(xs), K + 1)"""
    basis = Basis.parse(basis)
    _check_order(K)
    xs = _clamp_domain(np.atleast_1d(np.asarray(xs, dtype=np.float64)).reshape(-1))

    values = np.empty((xs.shape[0], K + 1))
    kind = basis.kind

    if kind is BasisKind.MONOMIAL:
        values[:, 0] = 1.0
        for k in range(1, K + 1):
            values[:, k] = values[:, k - 1] * xs

    elif kind is BasisKind.CHEBYSHEV:
        values[:, 0] = 1.0
        if K >= 1:
            values[:, 1] = xs
        for k in range(1, K):
            values[:, k + 1] = 2.0 * xs * values[:, k] - values[:, k - 1]

    elif kind is BasisKind.LEGENDRE:
        values[:, 0] = 1.0
        if K >= 1:
            values[:, 1] = xs
        # Bonnet: (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        for k in range(1, K):
            values[:, k + 1] = ((2 * k + 1) * xs * values[:, k] - k * values[:, k - 1]) / (k + 1)

    elif kind is BasisKind.BERNSTEIN:
        t = (xs + 1.0) / 2.0
        powers = np.arange(K + 1)
        values[:] = _binomials(K)[None, :] * t[:, None] ** powers[None, :] * (1.0 - t)[:, None] ** (K - powers)[None, :]

    return values / rescale_divisor(basis, K)

def eval_basis(basis: BasisLike, K: int, x: float) -> np.ndarray:
    """Basis vector (P_0(x), ..., P_K(x)) at a single point"""
    return basis_values(basis, K, np.array([x]))[0]

def dense_grid(points: int = None) -> np.ndarray:
    """Uniform grid on [-1, 1], endpoints included"""
    return np.linspace(-1.0, 1.0, points or config.PROFILE_GRID_POINTS)

def amplification_profile(basis: BasisLike, K: int, xs: np.ndarray, normalize: bool = False) -> np.ndarray:
    """M_K(x) = sum_k P_k(x)^2 on a grid, optionally scaled to max 1 over that grid"""
    xs = np.asarray(xs, dtype=np.float64).reshape(-1)
    if xs.size == 0:
        raise BasisDomainError("Amplification profile needs a non-empty grid")

    profile = np.sum(basis_values(basis, K, xs) ** 2, axis=1)
    if normalize:
        peak = profile.max()
        if peak > 0:
            profile = profile / peak
    return profile
