from typing import Sequence, Tuple, Union
import numpy as np
from src.exceptions import BoundInputError

def ftgc_monte_carlo(
    outputs: Union[np.ndarray, Sequence[np.ndarray]],
    samples: int,
    seed: int = 0
) -> Tuple[float, float]:
    """Monte-Carlo estimate of E_g[max_f <g, f>] / n over a finite function set.

    `outputs` is a (num_functions, n) array or a sequence of length-n vectors.
    Returns the estimate and its standard error.
    """
    F = np.atleast_2d(np.asarray(outputs, dtype=np.float64))
    if F.shape[0] == 0 or F.shape[1] == 0:
        raise BoundInputError("function set must be non-empty")
    if samples < 2:
        raise BoundInputError(f"need at least 2 samples, got {samples}")

    n = F.shape[1]
    g = np.random.default_rng(seed).standard_normal((samples, n))
    suprema = np.max(g @ F.T, axis=1) / n
    return float(suprema.mean()), float(suprema.std(ddof=1) / np.sqrt(samples))
