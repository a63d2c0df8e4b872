from dataclasses import asdict, dataclass
from typing import Dict, Sequence, Tuple
import numpy as np
from scipy import stats
from src.exceptions import StatisticsError

FISHER_Z = 1.959963984540054

@dataclass(frozen=True)
class CorrelationReport:
    pearson_r: float
    spearman_rho: float
    fisher_ci_low: float
    fisher_ci_high: float
    n_points: int

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

@dataclass(frozen=True)
class PairedTestResult:
    delta_mean: float
    p_value: float
    stars: str
    degenerate: bool = False

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)

def _as_vector(values: Sequence[float], name: str) -> np.ndarray:
    array = np.asarray(values, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(array)):
        raise StatisticsError(f"{name} contains non-finite values")
    return array

def correlate(xs: Sequence[float], ys: Sequence[float]) -> CorrelationReport:
    """Pearson r, Spearman rho (average ranks for ties) and a Fisher-z 95% interval for r"""
    x = _as_vector(xs, "xs")
    y = _as_vector(ys, "ys")
    if x.size != y.size:
        raise StatisticsError(f"length mismatch: {x.size} vs {y.size}")
    if x.size < 4:
        raise StatisticsError(f"need at least 4 points, got {x.size}")
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise StatisticsError("correlation undefined for a constant input")

    r = float(np.clip(stats.pearsonr(x, y)[0], -1.0, 1.0))
    rho = float(np.clip(stats.spearmanr(x, y)[0], -1.0, 1.0))

    half_width = FISHER_Z / np.sqrt(x.size - 3)
    with np.errstate(divide="ignore"):
        z = np.arctanh(r)
    low, high = float(np.tanh(z - half_width)), float(np.tanh(z + half_width))

    return CorrelationReport(
        pearson_r=r,
        spearman_rho=rho,
        fisher_ci_low=min(low, r),
        fisher_ci_high=max(high, r),
        n_points=int(x.size)
    )

def significance_stars(p_value: float) -> str:
    if p_value < 0.001:
        return "***"
    if p_value < 0.01:
        return "**"
    if p_value < 0.05:
        return "*"
    return ""

def paired_test(base_vals: Sequence[float], reg_vals: Sequence[float]) -> PairedTestResult:
    """Two-sided paired t-test of reg - base.

    Constant differences have no variance: Delta = 0 reports p = 1, any other
    constant Delta reports p = 0 with `degenerate` set and no stars.
    """
    base = _as_vector(base_vals, "base_vals")
    reg = _as_vector(reg_vals, "reg_vals")
    if base.size != reg.size:
        raise StatisticsError(f"length mismatch: {base.size} vs {reg.size}")
    if base.size < 2:
        raise StatisticsError(f"need at least 2 pairs, got {base.size}")

    diff = reg - base
    delta = float(diff.mean())
    # constant differences up to float rounding of reg - base
    if np.ptp(diff) <= 1e-12 * max(1.0, abs(delta)):
        if abs(delta) <= 1e-12:
            return PairedTestResult(delta_mean=0.0, p_value=1.0, stars="")
        return PairedTestResult(delta_mean=delta, p_value=0.0, stars="", degenerate=True)

    p_value = float(stats.ttest_rel(reg, base).pvalue)
    return PairedTestResult(delta_mean=delta, p_value=p_value, stars=significance_stars(p_value))

def mean_ci(values: Sequence[float], confidence: float = 0.95) -> Tuple[float, float]:
    """Mean and half-width of the Student-t confidence interval"""
    array = _as_vector(values, "values")
    if array.size == 0:
        raise StatisticsError("mean of an empty sample")
    mean = float(array.mean())
    if array.size < 2:
        return mean, float("nan")
    sem = float(array.std(ddof=1) / np.sqrt(array.size))
    return mean, float(stats.t.ppf(0.5 + confidence / 2.0, df=array.size - 1) * sem)
