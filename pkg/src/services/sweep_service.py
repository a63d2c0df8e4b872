from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple
import numpy as np
import pandas as pd
from src.basis import Basis, BasisLike
from src.bounds import report_for_model
from src.exceptions import StatisticsError, WorkbenchError
from src.graph import Graph
from src.network import ModelConfig, SpectralContext, train
from src.services.splits import make_split
from src.services.statistics import correlate
from src.utils import logger

NAN = float("nan")

@dataclass
class SweepRow:
    """One trained (dataset, basis, K, L, seed) configuration and its bounds"""

    dataset: str
    basis: str
    K: int
    L: int
    seed: int
    n: int = 0
    m: int = 0
    train_loss: float = NAN
    test_loss: float = NAN
    gap: float = NAN
    train_acc: float = NAN
    val_acc: float = NAN
    test_acc: float = NAN
    ftgc_nonlinear: float = NAN
    ftgc_linear: float = NAN
    weight_term: float = NAN
    spectral_term: float = NAN
    gap_bound: float = NAN
    jacobian_bound: float = NAN
    true_jacobian: float = NAN
    jacobian_ratio: float = NAN
    C_W: float = NAN
    C_theta: float = NAN
    W_in_norm: float = NAN
    W_out_norm: float = NAN
    epochs_run: int = 0
    best_epoch: int = 0
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error

    def to_record(self) -> Dict[str, object]:
        return asdict(self)

    @classmethod
    def columns(cls) -> List[str]:
        return list(cls.__dataclass_fields__)

@dataclass(frozen=True)
class SweepTask:
    dataset: str
    basis: Basis
    K: int
    L: int
    seed: int

@dataclass
class SweepDataset:
    """A graph and its shared spectral data; read-only once built"""

    name: str
    graph: Graph
    context: SpectralContext = field(repr=False)

    @classmethod
    def build(cls, name: str, graph: Graph) -> "SweepDataset":
        return cls(name=name, graph=graph, context=SpectralContext.from_graph(graph))

def parse_order_range(text: str) -> List[int]:
    """'1..10' (inclusive) or a comma list such as '1,2,5'"""
    text = text.strip()
    if ".." in text:
        start, stop = [piece.strip() for piece in text.split("..", 1)]
        low, high = int(start), int(stop)
        if high < low:
            raise ValueError(f"empty range '{text}'")
        return list(range(low, high + 1))
    return [int(piece) for piece in text.split(",") if piece.strip()]

def run_single(dataset: SweepDataset, task: SweepTask, base_config: ModelConfig) -> SweepRow:
    """Train one configuration and compute every bound from its measured norms"""
    graph = dataset.graph
    row = SweepRow(dataset=task.dataset, basis=task.basis.name, K=task.K, L=task.L, seed=task.seed, n=graph.n)
    try:
        split = make_split(graph.labels, seed=task.seed)
        model = base_config.with_updates(
            basis=task.basis.kind,
            rescaled=task.basis.rescaled,
            order=task.K,
            num_filter_layers=task.L,
            seed=task.seed
        )
        V_P = dataset.context.basis_matrix(task.basis, task.K)
        result = train(model, graph, split, seed=task.seed, context=dataset.context, V_P=V_P)
        norms = result.measured_norms
        report = report_for_model(result.params, result.config, dataset.context, V_P, split.num_labelled, norms)

        row.m = split.num_labelled
        row.train_loss, row.test_loss, row.gap = result.train_loss, result.test_loss, result.gap
        row.train_acc, row.val_acc, row.test_acc = result.train_acc, result.val_acc, result.test_acc
        row.ftgc_nonlinear, row.ftgc_linear = report.ftgc_nonlinear, report.ftgc_linear
        row.weight_term, row.spectral_term = report.weight_term, report.spectral_term
        row.gap_bound = report.gap.total
        row.jacobian_bound = report.jacobian_bound
        row.true_jacobian = report.true_jacobian
        row.jacobian_ratio = NAN if report.jacobian_ratio is None else report.jacobian_ratio
        row.C_W = float(np.prod(norms.C_W))
        row.C_theta = float(np.prod(norms.C_theta))
        row.W_in_norm = NAN if norms.W_in is None else norms.W_in
        row.W_out_norm = NAN if norms.W_out is None else norms.W_out
        row.epochs_run, row.best_epoch = result.epochs_run, result.best_epoch

    except WorkbenchError as e:
        logger.warning(f"Sweep row {task.dataset}/{task.basis.name}/K={task.K}/L={task.L}/seed={task.seed} failed: {e}")
        row.error = f"{type(e).__name__}: {e}"
    except (ValueError, FloatingPointError, np.linalg.LinAlgError) as e:
        logger.error(f"Unexpected failure in sweep row {task}: {e}")
        row.error = f"{type(e).__name__}: {e}"

    return row

def sweep_tasks(
    datasets: Sequence[SweepDataset],
    bases: Sequence[BasisLike],
    orders: Sequence[int],
    depths: Sequence[int],
    seeds: Sequence[int],
    rescaled: bool = False
) -> List[SweepTask]:
    return [
        SweepTask(dataset=dataset.name, basis=Basis.parse(basis, rescaled=rescaled), K=K, L=L, seed=seed)
        for dataset, basis, K, L, seed in product(datasets, bases, orders, depths, seeds)
    ]

def run_sweep(
    datasets: Sequence[Tuple[str, Graph]],
    bases: Sequence[BasisLike],
    orders: Sequence[int],
    depths: Sequence[int],
    seeds: Sequence[int],
    train_config: ModelConfig,
    jobs: int = 1,
    rescaled: bool = False,
    on_row: Optional[Callable[[SweepRow], None]] = None
) -> List[SweepRow]:
    """One row per (dataset, basis, K, L, seed), returned and streamed in task order"""
    prepared = {name: SweepDataset.build(name, graph) for name, graph in datasets}
    tasks = sweep_tasks(list(prepared.values()), bases, orders, depths, seeds, rescaled)
    logger.info(f"Running sweep of {len(tasks)} configurations with {jobs} worker(s)")

    def work(task: SweepTask) -> SweepRow:
        return run_single(prepared[task.dataset], task, train_config)

    rows: List[SweepRow] = []

    def collect(results: Iterable[SweepRow]):
        for row in results:
            rows.append(row)
            if on_row is not None:
                on_row(row)

    if jobs <= 1:
        collect(work(task) for task in tasks)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            collect(executor.map(work, tasks))

    failed = sum(1 for row in rows if not row.ok)
    logger.info(f"Sweep finished: {len(rows) - failed} rows ok, {failed} failed")
    return rows

def rows_frame(rows: Sequence[SweepRow]) -> pd.DataFrame:
    return pd.DataFrame([row.to_record() for row in rows], columns=SweepRow.columns())

def _safe_correlation(xs: pd.Series, ys: pd.Series) -> Optional[Dict[str, float]]:
    try:
        return correlate(xs.to_numpy(), ys.to_numpy()).to_dict()
    except StatisticsError as e:
        logger.warning(f"Correlation skipped: {e}")
        return None

SENSITIVITY_COLUMNS = ["ftgc_nonlinear", "ftgc_linear", "weight_term", "spectral_term", "gap_bound"]

def sweep_summary(rows: Sequence[SweepRow]) -> Dict[str, object]:
    """Correlations of the measured gap with each bound term, plus soundness checks"""
    frame = rows_frame(rows)
    ok = frame[frame["error"] == ""]

    summary: Dict[str, object] = {
        "rows": int(len(frame)),
        "failed_rows": int(len(frame) - len(ok)),
        "correlations": {
            column: _safe_correlation(ok[column], ok["gap"]) for column in SENSITIVITY_COLUMNS
        },
        "by_basis": {
            basis: _safe_correlation(group["ftgc_nonlinear"], group["gap"])
            for basis, group in ok.groupby("basis", sort=True)
        },
    }

    if len(ok):
        product_error = np.abs(ok["weight_term"] * ok["spectral_term"] - ok["ftgc_nonlinear"])
        scale = np.maximum(np.abs(ok["ftgc_nonlinear"]), np.finfo(float).tiny)
        linear_limit = ok["ftgc_nonlinear"] / np.sqrt(ok["n"])
        summary["checks"] = {
            "jacobian_violations": int((ok["true_jacobian"] > ok["jacobian_bound"]).sum()),
            "ordering_violations": int((ok["ftgc_linear"] > linear_limit * (1 + 1e-12)).sum()),
            "decomposition_max_rel_error": float((product_error / scale).max()),
            "max_jacobian_ratio": float(ok["jacobian_ratio"].max()),
            "min_jacobian_ratio": float(ok["jacobian_ratio"].min()),
        }
    return summary
