import numpy as np
from src.basis import BasisMatrix
from src.exceptions import ConvergenceError
from src.graph import SpectralDecomposition
from src.network import ModelParams, jacobian_apply
from src.network.jacobian import Activations
from src.utils import logger

def true_jacobian_norm(
    params: ModelParams,
    decomp: SpectralDecomposition,
    V_P: BasisMatrix,
    H0: np.ndarray,
    activation: Activations = "relu",
    tol: float = 1e-6,
    max_iter: int = 1000,
    seed: int = 0
) -> float:
    """||J||_2 of the filter core at H0 by power iteration on J^T J (matrix-free)"""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(np.shape(H0))
    v /= np.linalg.norm(v)

    previous = None
    last_gap = float("nan")
    for iteration in range(max_iter):
        Jv = jacobian_apply(params, decomp, V_P, H0, v, "jvp", activation)
        rayleigh = float(np.sum(Jv * Jv))
        if rayleigh == 0.0:
            return 0.0

        estimate = np.sqrt(rayleigh)
        if previous is not None:
            last_gap = abs(estimate - previous)
        if previous is not None and last_gap <= tol * estimate:
            logger.debug(f"Jacobian power iteration converged in {iteration + 1} steps: {estimate:.6g}")
            return float(estimate)
        previous = estimate

        w = jacobian_apply(params, decomp, V_P, H0, Jv, "vjp", activation)
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return float(estimate)
        v = w / norm

    raise ConvergenceError(f"Jacobian power iteration did not converge in {max_iter} steps", residual=last_gap)
