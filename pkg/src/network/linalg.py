import numpy as np
from src.utils import logger

def spectral_norm(M: np.ndarray, tol: float = 1e-10, max_iter: int = 10000, seed: int = 0) -> float:
    """Largest singular value by power iteration on M^T M"""
    M = np.atleast_2d(np.asarray(M, dtype=np.float64))
    if M.size == 0:
        raise ValueError("spectral_norm of an empty matrix")
    if not np.any(M):
        return 0.0

    x = np.random.default_rng(seed).standard_normal(M.shape[1])
    x /= np.linalg.norm(x)

    estimate_old = np.inf
    estimate = 0.0
    for iteration in range(max_iter):
        Mx = M @ x
        # Rayleigh quotient x^T M^T M x
        estimate = float(Mx @ Mx)
        if estimate == 0.0:
            # start vector in the null space; restart along the largest column
            x = M[np.argmax(np.abs(M).sum(axis=1))].copy()
            x /= np.linalg.norm(x)
            continue
        if abs(estimate - estimate_old) <= tol * estimate:
            break
        estimate_old = estimate
        x = M.T @ Mx
        x /= np.linalg.norm(x)
    else:
        logger.warning(f"spectral_norm stopped after {max_iter} iterations")

    return float(np.sqrt(estimate))
