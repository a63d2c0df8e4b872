from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Sequence
import numpy as np
from src.basis import Basis, BasisKind, BasisLike
from src.bounds import jacobian_norm_bound, model_bound_inputs, true_jacobian_norm
from src.exceptions import WorkbenchError
from src.graph import Graph
from src.network import ModelConfig, SpectralContext, core_input, train
from src.services.splits import make_split
from src.utils import logger

NAN = float("nan")

@dataclass
class TightnessRow:
    basis: str
    K: int
    L: int
    seed: int
    true_jacobian: float = NAN
    jacobian_bound: float = NAN
    ratio: float = NAN
    test_acc: float = NAN
    error: str = ""

    def to_record(self) -> Dict[str, object]:
        return asdict(self)

    @classmethod
    def columns(cls) -> List[str]:
        return list(cls.__dataclass_fields__)

def closed_form_jacobian_norm(W: np.ndarray, response: np.ndarray) -> float:
    """||J||_2 of a single linear filter layer: ||W||_2 max_i |(V_P theta)_i|"""
    return float(np.linalg.norm(W, 2)) * float(np.max(np.abs(response)))

def jacobian_tightness(
    graph: Graph,
    train_config: ModelConfig,
    basis: BasisLike = BasisKind.MONOMIAL,
    orders: Sequence[int] = range(1, 11),
    depth: int = 2,
    seed: int = 0,
    rescaled: bool = False,
    on_row: Optional[Callable[[TightnessRow], None]] = None
) -> List[TightnessRow]:
    """Train a relu filter stack per order and compare its true Jacobian norm with the bound"""
    basis = Basis.parse(basis, rescaled=rescaled)
    context = SpectralContext.from_graph(graph)
    split = make_split(graph.labels, seed=seed)
    rows = []

    for K in orders:
        row = TightnessRow(basis=basis.name, K=K, L=depth, seed=seed)
        try:
            model = train_config.with_updates(
                basis=basis.kind,
                rescaled=basis.rescaled,
                order=K,
                num_filter_layers=depth,
                activation="relu",
                seed=seed
            )
            V_P = context.basis_matrix(basis, K)
            result = train(model, graph, split, seed=seed, context=context, V_P=V_P)
            inputs = model_bound_inputs(result.params, context, V_P, split.num_labelled, result.measured_norms)
            H0 = core_input(result.params, graph.features)

            row.true_jacobian = true_jacobian_norm(result.params, context.decomposition, V_P, H0, activation=result.config.layer_activations)
            row.jacobian_bound = jacobian_norm_bound(inputs)
            row.ratio = row.jacobian_bound / row.true_jacobian if row.true_jacobian > 0 else NAN
            row.test_acc = result.test_acc
            logger.info(f"{basis.name} K={K}: ||J||={row.true_jacobian:.4g} bound={row.jacobian_bound:.4g} ratio={row.ratio:.2f}")

        except WorkbenchError as e:
            logger.warning(f"Tightness run {basis.name} K={K} failed: {e}")
            row.error = f"{type(e).__name__}: {e}"

        rows.append(row)
        if on_row is not None:
            on_row(row)

    return rows
