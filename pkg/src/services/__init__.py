from .synthetic import SbmParams, generate_sbm, random_graph, sbm_from_params
from .splits import Split, make_split
from .statistics import CorrelationReport, PairedTestResult, correlate, mean_ci, paired_test, significance_stars
from .sweep_service import SweepRow, parse_order_range, run_sweep, rows_frame, sweep_summary
from .ablation_service import AblationResult, AblationRow, Candidate, regularizer_ablation, search_candidates
from .jacobian_service import TightnessRow, closed_form_jacobian_norm, jacobian_tightness
from .selftest import CheckResult, run_selftest

__all__ = [
    "SbmParams",
    "generate_sbm",
    "random_graph",
    "sbm_from_params",
    "Split",
    "make_split",
    "CorrelationReport",
    "PairedTestResult",
    "correlate",
    "mean_ci",
    "paired_test",
    "significance_stars",
    "SweepRow",
    "parse_order_range",
    "run_sweep",
    "rows_frame",
    "sweep_summary",
    "AblationResult",
    "AblationRow",
    "Candidate",
    "regularizer_ablation",
    "search_candidates",
    "TightnessRow",
    "closed_form_jacobian_norm",
    "jacobian_tightness",
    "CheckResult",
    "run_selftest",
]
