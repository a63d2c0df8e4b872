"""Closed-form complexity, generalization-gap and Jacobian bounds."""

from dataclasses import dataclass
from typing import Sequence
import numpy as np
from src.bounds.inputs import BoundInputs
from src.exceptions import BoundInputError

@dataclass(frozen=True)
class FtgcTerms:
    value: float
    weight_term: float
    spectral_term: float

@dataclass(frozen=True)
class GapBound:
    complexity_term: float
    partition_term: float
    confidence_term: float

    @property
    def total(self) -> float:
        return self.complexity_term + self.partition_term + self.confidence_term

def spectral_energy(X_hat: np.ndarray) -> np.ndarray:
    """Squared row norms of a GFT'd signal, E_0(lambda_i)"""
    X_hat = np.asarray(X_hat, dtype=np.float64)
    if X_hat.ndim == 1:
        return X_hat ** 2
    return np.sum(X_hat ** 2, axis=1)

def weight_term(inputs: BoundInputs, alpha: float = None) -> float:
    alpha = inputs.alpha if alpha is None else alpha
    return float(np.prod([alpha * w * t for w, t in zip(inputs.C_W, inputs.C_theta)]))

def ftgc_nonlinear_bound(inputs: BoundInputs, alpha: float = None) -> FtgcTerms:
    """(1/sqrt(n)) ||V_P||_{2,inf}^{L-1} prod(alpha C_W C_theta) (sum_i ||v_i||^2 E_0)^{1/2}"""
    V = inputs.basis_matrix
    interaction = np.sqrt(np.sum(V.row_norms ** 2 * inputs.energy))
    spectral = V.two_inf_norm ** (inputs.L - 1) * interaction / np.sqrt(inputs.n)
    weights = weight_term(inputs, alpha)
    return FtgcTerms(value=float(weights * spectral), weight_term=weights, spectral_term=float(spectral))

def ftgc_linear_bound(inputs: BoundInputs) -> float:
    """(1/n) prod(C_W C_theta) (sum_i ||v_i||^{2L} E_0)^{1/2} for deep linear stacks"""
    V = inputs.basis_matrix
    interaction = np.sqrt(np.sum(V.row_norms ** (2 * inputs.L) * inputs.energy))
    return float(weight_term(inputs, alpha=1.0) * interaction / inputs.n)

def gap_bound(ftgc: float, inputs: BoundInputs) -> GapBound:
    """Additive terms of the transductive gap bound (empirical risk excluded)"""
    n, m, u = inputs.n, inputs.m, inputs.u
    if m <= 0 or u <= 0:
        raise BoundInputError(f"labelled set must be a proper subset (m={m}, n={n})")

    return GapBound(
        complexity_term=float(n ** 2 * inputs.C_gc / (m * u) * ftgc),
        partition_term=float(inputs.C1 * n * np.sqrt(min(m, u)) / (m * u)),
        confidence_term=float(inputs.C2 * np.sqrt(n / (m * u) * np.log(1.0 / inputs.delta)))
    )

def jacobian_norm_bound(inputs: BoundInputs) -> float:
    """prod_l alpha C_W,l C_theta,l ||V_P||_{2,inf}"""
    per_layer = [
        inputs.alpha * w * t * inputs.basis_matrix.two_inf_norm
        for w, t in zip(inputs.C_W, inputs.C_theta)
    ]
    return float(np.prod(per_layer))

def depth_curve(inputs: BoundInputs, depths: Sequence[int], adjacency_inf_norm: float):
    """Bounds for deeper stacks that repeat the first layer's constants.

    The spatial column is ||A_hat||_inf^L, a growth proxy for degree-based
    spatial bounds, not a reproduction of any specific one.
    """
    rows = []
    for depth in depths:
        scaled = BoundInputs(
            basis_matrix=inputs.basis_matrix,
            energy=inputs.energy,
            C_W=[inputs.C_W[0]] * depth,
            C_theta=[inputs.C_theta[0]] * depth,
            n=inputs.n,
            m=inputs.m,
            alpha=inputs.alpha,
            delta=inputs.delta,
            C1=inputs.C1,
            C2=inputs.C2
        )
        rows.append({
            "depth": depth,
            "ftgc_nonlinear": ftgc_nonlinear_bound(scaled).value,
            "ftgc_linear": ftgc_linear_bound(scaled),
            "jacobian_bound": jacobian_norm_bound(scaled),
            "spatial_proxy": float(adjacency_inf_norm ** depth),
        })
    return rows
