from dataclasses import asdict, dataclass, field
from typing import Dict, Optional
from src.basis import BasisMatrix
from src.bounds.complexity import (
    GapBound,
    ftgc_linear_bound,
    ftgc_nonlinear_bound,
    gap_bound,
    jacobian_norm_bound,
    spectral_energy,
)
from src.bounds.inputs import BoundInputs
from src.bounds.jacobian_norm import true_jacobian_norm
from src.config import config
from src.graph import gft
from src.network import MeasuredNorms, ModelConfig, ModelParams, SpectralContext, core_input

CORE_NOTE = (
    "bounds cover the non-residual filter core; input/readout layers of a wrapped model enter only "
    "through wrapper_prefactor = ||W_in||_2 ||W_out||_2, which is 1 for a plain stack"
)

@dataclass
class BoundReport:
    ftgc_nonlinear: float
    ftgc_linear: float
    gap: GapBound
    jacobian_bound: float
    weight_term: float
    spectral_term: float
    wrapper_prefactor: float = 1.0
    true_jacobian: Optional[float] = None
    notes: str = field(default=CORE_NOTE)

    @property
    def jacobian_ratio(self) -> Optional[float]:
        if self.true_jacobian is None or self.true_jacobian == 0:
            return None
        return self.jacobian_bound / self.true_jacobian

    def to_record(self) -> Dict[str, object]:
        record = asdict(self)
        gap = record.pop("gap")
        record.update({f"gap_{name}": value for name, value in gap.items()})
        record["gap_bound"] = self.gap.total
        record["jacobian_ratio"] = self.jacobian_ratio
        return record

def compute_bound_report(inputs: BoundInputs, true_jacobian: float = None, wrapper_prefactor: float = 1.0) -> BoundReport:
    nonlinear = ftgc_nonlinear_bound(inputs)
    return BoundReport(
        ftgc_nonlinear=nonlinear.value,
        ftgc_linear=ftgc_linear_bound(inputs),
        gap=gap_bound(nonlinear.value, inputs),
        jacobian_bound=jacobian_norm_bound(inputs),
        weight_term=nonlinear.weight_term,
        spectral_term=nonlinear.spectral_term,
        wrapper_prefactor=wrapper_prefactor,
        true_jacobian=true_jacobian
    )

def model_bound_inputs(
    params: ModelParams,
    context: SpectralContext,
    V_P: BasisMatrix,
    labelled: int,
    norms: MeasuredNorms = None,
    delta: float = None,
    C1: float = None,
    C2: float = None
) -> BoundInputs:
    """Bound inputs for a trained model, with E_0 taken from the filter-core input"""
    norms = norms or MeasuredNorms.of(params)
    H0 = core_input(params, context.graph.features)
    return BoundInputs(
        basis_matrix=V_P,
        energy=spectral_energy(gft(context.decomposition, H0, "forward")),
        C_W=norms.C_W,
        C_theta=norms.C_theta,
        n=context.graph.n,
        m=labelled,
        alpha=1.0,
        delta=config.BOUND_DELTA if delta is None else delta,
        C1=config.BOUND_C1 if C1 is None else C1,
        C2=config.BOUND_C2 if C2 is None else C2
    )

def report_for_model(
    params: ModelParams,
    model: ModelConfig,
    context: SpectralContext,
    V_P: BasisMatrix,
    labelled: int,
    norms: MeasuredNorms = None,
    measure_jacobian: bool = True
) -> BoundReport:
    """All bounds for a trained model plus its measured Jacobian norm"""
    norms = norms or MeasuredNorms.of(params)
    inputs = model_bound_inputs(params, context, V_P, labelled, norms)

    true_jacobian = None
    if measure_jacobian:
        H0 = core_input(params, context.graph.features)
        true_jacobian = true_jacobian_norm(params, context.decomposition, V_P, H0, activation=model.layer_activations)

    return compute_bound_report(inputs, true_jacobian=true_jacobian, wrapper_prefactor=norms.wrapper_prefactor)
