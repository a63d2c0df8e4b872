from .inputs import C_GC, BoundInputs
from .complexity import (
    FtgcTerms,
    GapBound,
    depth_curve,
    ftgc_linear_bound,
    ftgc_nonlinear_bound,
    gap_bound,
    jacobian_norm_bound,
    spectral_energy,
    weight_term,
)
from .jacobian_norm import true_jacobian_norm
from .monte_carlo import ftgc_monte_carlo
from .report import BoundReport, compute_bound_report, model_bound_inputs, report_for_model

__all__ = [
    "C_GC",
    "BoundInputs",
    "FtgcTerms",
    "GapBound",
    "depth_curve",
    "ftgc_linear_bound",
    "ftgc_nonlinear_bound",
    "gap_bound",
    "jacobian_norm_bound",
    "spectral_energy",
    "weight_term",
    "true_jacobian_norm",
    "ftgc_monte_carlo",
    "BoundReport",
    "compute_bound_report",
    "model_bound_inputs",
    "report_for_model",
]
