from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple
import numpy as np
from src.basis import Basis, BasisLike
from src.config import config
from src.exceptions import ConfigError, WorkbenchError
from src.graph import Graph
from src.network import ModelConfig, SpectralContext, TrainResult, train
from src.services.splits import Split, make_split
from src.services.statistics import mean_ci, paired_test
from src.utils import logger

NAN = float("nan")

@dataclass(frozen=True)
class Candidate:
    """One point of the hyperparameter search; lambda_ew is searched separately"""

    overrides: Tuple[Tuple[str, object], ...] = ()

    def apply(self, base: ModelConfig, lambda_ew: float) -> ModelConfig:
        return base.with_updates(**dict(self.overrides), lambda_ew=lambda_ew)

    def describe(self) -> str:
        return ";".join(f"{key}={value}" for key, value in self.overrides) or "defaults"

@dataclass
class SplitOutcome:
    dataset: str
    basis: str
    variant: str
    seed: int
    lambda_ew: float
    test_acc: float
    gap: float
    val_acc: float

@dataclass
class AblationRow:
    """Base vs +Reg comparison for one basis, laid out as mean, CI half-width and paired delta"""

    dataset: str
    basis: str
    splits: int
    base_acc: float = NAN
    base_acc_ci: float = NAN
    reg_acc: float = NAN
    reg_acc_ci: float = NAN
    delta_acc: float = NAN
    acc_p_value: float = NAN
    acc_stars: str = ""
    base_gap: float = NAN
    base_gap_ci: float = NAN
    reg_gap: float = NAN
    reg_gap_ci: float = NAN
    delta_gap: float = NAN
    gap_p_value: float = NAN
    gap_stars: str = ""
    degenerate: bool = False
    best_lambda: float = NAN
    base_hyperparams: str = ""
    reg_hyperparams: str = ""
    error: str = ""

    def to_record(self) -> Dict[str, object]:
        return asdict(self)

    @classmethod
    def columns(cls) -> List[str]:
        return list(cls.__dataclass_fields__)

@dataclass
class AblationResult:
    rows: List[AblationRow] = field(default_factory=list)
    splits: List[SplitOutcome] = field(default_factory=list)

def search_candidates(
    space: Dict[str, Sequence[object]] = None,
    trials: int = 0,
    seed: int = 0
) -> List[Candidate]:
    """Exhaustive grid when trials >= grid size, a seeded subsample otherwise; trials <= 0 keeps the defaults"""
    if trials <= 0:
        return [Candidate()]

    space = space or config.SEARCH_SPACE
    keys = sorted(space)
    grid = [tuple(zip(keys, values)) for values in product(*(space[key] for key in keys))]
    if trials >= len(grid):
        return [Candidate(overrides) for overrides in grid]

    picked = np.sort(np.random.default_rng(seed).choice(len(grid), size=trials, replace=False))
    return [Candidate(grid[index]) for index in picked]

class RegularizerAblation:
    """Two hyperparameter searches per basis, without and with the energy-weighted regularizer"""

    def __init__(
        self,
        dataset: str,
        graph: Graph,
        train_config: ModelConfig,
        seeds: Sequence[int],
        lambda_grid: Sequence[float],
        candidates: Sequence[Candidate],
        jobs: int = 1
    ):
        if 0.0 not in [float(value) for value in lambda_grid]:
            raise ConfigError("lambda grid must include 0 so the base model is part of the +Reg search")
        if len(seeds) < 2:
            raise ConfigError(f"ablation needs at least 2 splits, got {len(seeds)}")

        self.dataset = dataset
        self.graph = graph
        self.train_config = train_config
        self.seeds = list(seeds)
        self.lambda_grid = sorted(set(float(value) for value in lambda_grid))
        self.candidates = list(candidates)
        self.jobs = jobs
        self.context = SpectralContext.from_graph(graph)
        self.splits: Dict[int, Split] = {seed: make_split(graph.labels, seed=seed) for seed in self.seeds}
        self._results: Dict[Tuple[int, float, int], Optional[TrainResult]] = {}

    def _fit(self, basis: Basis, index: int, lambda_ew: float, seed: int) -> Optional[TrainResult]:
        model = self.candidates[index].apply(self.train_config, lambda_ew).with_updates(
            basis=basis.kind, rescaled=basis.rescaled, seed=seed
        )
        try:
            V_P = self.context.basis_matrix(basis, model.order)
            return train(model, self.graph, self.splits[seed], seed=seed, context=self.context, V_P=V_P)
        except (WorkbenchError, ValueError) as e:
            logger.warning(f"Ablation run {basis.name} {self.candidates[index].describe()} lambda={lambda_ew} seed={seed} failed: {e}")
            return None

    def _run_all(self, basis: Basis):
        keys = [
            (index, lambda_ew, seed)
            for index in range(len(self.candidates))
            for lambda_ew in self.lambda_grid
            for seed in self.seeds
        ]

        def work(key: Tuple[int, float, int]) -> Optional[TrainResult]:
            return self._fit(basis, *key)

        if self.jobs <= 1:
            results = [work(key) for key in keys]
        else:
            with ThreadPoolExecutor(max_workers=self.jobs) as executor:
                results = list(executor.map(work, keys))
        self._results = dict(zip(keys, results))

    def _mean_val_acc(self, index: int, lambda_ew: float) -> float:
        results = [self._results[(index, lambda_ew, seed)] for seed in self.seeds]
        if any(result is None for result in results):
            return -np.inf
        return float(np.mean([result.val_acc for result in results]))

    def _select(self, lambdas: Sequence[float]) -> Optional[Tuple[int, float]]:
        best, best_score = None, -np.inf
        for index in range(len(self.candidates)):
            for lambda_ew in lambdas:
                score = self._mean_val_acc(index, lambda_ew)
                if score > best_score:
                    best, best_score = (index, lambda_ew), score
        return best

    def run_basis(self, basis: Basis) -> Tuple[AblationRow, List[SplitOutcome]]:
        row = AblationRow(dataset=self.dataset, basis=basis.name, splits=len(self.seeds))
        self._run_all(basis)

        base = self._select([0.0])
        reg = self._select(self.lambda_grid)
        if base is None or reg is None:
            row.error = "every candidate failed on at least one split"
            return row, []

        outcomes = []
        for variant, (index, lambda_ew) in (("base", base), ("reg", reg)):
            for seed in self.seeds:
                result = self._results[(index, lambda_ew, seed)]
                outcomes.append(SplitOutcome(
                    dataset=self.dataset,
                    basis=basis.name,
                    variant=variant,
                    seed=seed,
                    lambda_ew=lambda_ew,
                    test_acc=result.test_acc,
                    gap=result.gap,
                    val_acc=result.val_acc
                ))

        base_acc = [o.test_acc for o in outcomes if o.variant == "base"]
        reg_acc = [o.test_acc for o in outcomes if o.variant == "reg"]
        base_gap = [o.gap for o in outcomes if o.variant == "base"]
        reg_gap = [o.gap for o in outcomes if o.variant == "reg"]

        row.base_acc, row.base_acc_ci = mean_ci(base_acc)
        row.reg_acc, row.reg_acc_ci = mean_ci(reg_acc)
        row.base_gap, row.base_gap_ci = mean_ci(base_gap)
        row.reg_gap, row.reg_gap_ci = mean_ci(reg_gap)

        acc_test = paired_test(base_acc, reg_acc)
        gap_test = paired_test(base_gap, reg_gap)
        row.delta_acc, row.acc_p_value, row.acc_stars = acc_test.delta_mean, acc_test.p_value, acc_test.stars
        row.delta_gap, row.gap_p_value, row.gap_stars = gap_test.delta_mean, gap_test.p_value, gap_test.stars
        row.degenerate = acc_test.degenerate or gap_test.degenerate

        row.best_lambda = reg[1]
        row.base_hyperparams = self.candidates[base[0]].describe()
        row.reg_hyperparams = self.candidates[reg[0]].describe()

        logger.info(
            f"{self.dataset}/{basis.name}: acc {row.base_acc:.3f} -> {row.reg_acc:.3f} "
            f"gap {row.base_gap:.4f} -> {row.reg_gap:.4f} (lambda={row.best_lambda})"
        )
        return row, outcomes

def regularizer_ablation(
    dataset: str,
    graph: Graph,
    bases: Sequence[BasisLike],
    seeds: Sequence[int],
    lambda_grid: Sequence[float],
    train_config: ModelConfig,
    trials: int = 0,
    search_seed: int = 0,
    jobs: int = 1,
    rescaled: bool = False
) -> AblationResult:
    """Table rows (one per basis) comparing the best base model with the best regularized one"""
    ablation = RegularizerAblation(
        dataset=dataset,
        graph=graph,
        train_config=train_config,
        seeds=seeds,
        lambda_grid=lambda_grid,
        candidates=search_candidates(trials=trials, seed=search_seed),
        jobs=jobs
    )

    result = AblationResult()
    for basis in bases:
        row, outcomes = ablation.run_basis(Basis.parse(basis, rescaled=rescaled))
        result.rows.append(row)
        result.splits.extend(outcomes)
    return result
