"""Invariant suites that run without any dataset.

Every check is seeded, so repeated runs produce identical results.
"""

from dataclasses import asdict, dataclass
from itertools import product
from typing import Callable, Dict, List, Tuple
import numpy as np
from src.basis import BasisKind, amplification_profile, dense_grid, max_amplification
from src.bounds import (
    BoundInputs,
    ftgc_linear_bound,
    ftgc_monte_carlo,
    ftgc_nonlinear_bound,
    jacobian_norm_bound,
    model_bound_inputs,
    true_jacobian_norm,
)
from src.exceptions import WorkbenchError
from src.graph import Graph, build_normalized_adjacency, eigendecompose, gft
from src.network import (
    ModelConfig,
    ModelParams,
    SpectralContext,
    core_input,
    init_model,
    loss_and_grads,
    spatial_filter,
    train,
)
from src.services.jacobian_service import closed_form_jacobian_norm
from src.services.splits import make_split
from src.services.synthetic import generate_sbm, random_graph
from src.utils import derive_seed, logger

ALL_BASES = [kind.value for kind in BasisKind]

@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float
    threshold: float
    detail: str = ""

    def to_record(self) -> Dict[str, object]:
        return asdict(self)

    @classmethod
    def columns(cls) -> List[str]:
        return list(cls.__dataclass_fields__)

def check_amplification_endpoints() -> CheckResult:
    worst = 0.0
    for basis in ALL_BASES:
        for K in range(21):
            profile = amplification_profile(basis, K, np.array([-1.0, 1.0]))
            worst = max(worst, abs(profile.max() - max_amplification(basis, K)))
    return CheckResult("amplification_endpoints", worst <= 1e-10, worst, 1e-10, "K <= 20, all bases")

def check_chebyshev_midpoint() -> CheckResult:
    xs = dense_grid()
    profile = amplification_profile("chebyshev", 10, xs, normalize=True)
    value = float(profile[np.argmin(np.abs(xs))])
    error = abs(value - 6.0 / 11.0)
    return CheckResult("chebyshev_midpoint", error <= 1e-12, error, 1e-12, f"normalized M_10(0) = {value:.15f}")

def check_eigendecomposition(graphs: int = 100) -> CheckResult:
    rng = np.random.default_rng(0)
    worst = 0.0
    for index in range(graphs):
        n = int(rng.integers(2, 201))
        graph = random_graph(n, float(rng.uniform(0.01, 0.3)), 1, 2, seed=index)
        decomp = eigendecompose(build_normalized_adjacency(graph))
        worst = max(worst, decomp.residual, decomp.orthogonality_error)
    return CheckResult("eigendecomposition", worst <= 1e-8, worst, 1e-8, f"{graphs} random graphs, n <= 200")

def check_path_spectrum() -> CheckResult:
    graph = Graph.from_edges(3, [(0, 1), (1, 2)], np.zeros((3, 1)), np.zeros(3))
    eigenvalues = eigendecompose(build_normalized_adjacency(graph)).eigenvalues
    error = float(np.max(np.abs(eigenvalues - np.array([-1.0, 0.0, 1.0]))))
    return CheckResult("path_spectrum", error <= 1e-10, error, 1e-10, "P3 spectrum {-1, 0, 1}")

def finite_difference_grads(loss: Callable[[ModelParams], float], params: ModelParams, h: float = 1e-5) -> ModelParams:
    """Central differences over every parameter entry"""
    tensors = params.copy().as_dict()
    grads = {}
    for name, tensor in tensors.items():
        grad = np.zeros_like(tensor)
        for index in np.ndindex(tensor.shape):
            original = tensor[index]
            tensor[index] = original + h
            upper = loss(ModelParams.from_dict(tensors))
            tensor[index] = original - h
            lower = loss(ModelParams.from_dict(tensors))
            tensor[index] = original
            grad[index] = (upper - lower) / (2.0 * h)
        grads[name] = grad
    return ModelParams.from_dict(grads)

def gradient_problem(seed: int, basis: str = "chebyshev", **overrides) -> Tuple[ModelConfig, SpectralContext, np.ndarray]:
    graph = random_graph(20, 0.25, 3, 2, seed=seed)
    model = ModelConfig(
        in_dim=3,
        hidden_dim=4,
        num_classes=2,
        order=3,
        basis=basis,
        num_filter_layers=2,
        activation="relu",
        lambda_ew=0.5,
        ew_source="raw_features",
        seed=seed
    )
    train_idx = np.arange(0, 20, 2)
    return model.with_updates(**overrides), SpectralContext.from_graph(graph), train_idx

def gradient_error(
    model: ModelConfig,
    context: SpectralContext,
    train_idx: np.ndarray,
    seed: int,
    prefixes: Tuple[str, ...] = ("",)
) -> float:
    """Worst relative gap between backprop and central differences.

    The dropout generator is re-seeded on every evaluation so both sides see
    the same masks. Only tensors whose name starts with one of `prefixes` are compared.
    """
    V_P = context.basis_matrix(model.filter_basis, model.order)
    params = init_model(model, seed)
    params = params.map(lambda value: value + 0.1 * np.random.default_rng(seed).standard_normal(value.shape))
    graph = context.graph

    def evaluate(candidate: ModelParams) -> Tuple[float, ModelParams]:
        rng = np.random.default_rng(derive_seed(seed, 9))
        return loss_and_grads(candidate, context.decomposition, V_P, graph.features, graph.labels, train_idx, model, rng=rng)

    _, analytic = evaluate(params)
    numeric = finite_difference_grads(lambda candidate: evaluate(candidate)[0], params).as_dict()
    worst = 0.0
    for name, value in analytic.as_dict().items():
        if not name.startswith(prefixes):
            continue
        reference = numeric[name]
        scale = max(float(np.max(np.abs(reference))), 1e-3)
        worst = max(worst, float(np.max(np.abs(value - reference))) / scale)
    return worst

GRADIENT_CASES: Dict[str, Tuple[Dict[str, object], Tuple[str, ...]]] = {
    "base": ({}, ("",)),
    "dropout": ({"dropout1": 0.3, "dropout2": 0.2}, ("",)),
    "plain": ({"architecture": "plain", "dropout1": 0.3}, ("",)),
    # R_EW on the filter input holds W_in fixed, so only theta sees its gradient
    "filter_input": ({"ew_source": "filter_input", "lambda_ew": 2.0}, ("theta_",)),
}

def check_gradients(seeds: int = 5) -> CheckResult:
    worst = 0.0
    for seed in range(seeds):
        for overrides, prefixes in GRADIENT_CASES.values():
            model, context, train_idx = gradient_problem(seed, **overrides)
            worst = max(worst, gradient_error(model, context, train_idx, seed, prefixes))
    return CheckResult("gradient_check", worst <= 1e-4, worst, 1e-4, f"{seeds} seeds, {', '.join(GRADIENT_CASES)}, h=1e-5")

def check_spatial_spectral() -> CheckResult:
    graph = random_graph(30, 0.2, 4, 2, seed=7)
    context = SpectralContext.from_graph(graph)
    rng = np.random.default_rng(7)
    H = rng.standard_normal((30, 4))
    W = rng.standard_normal((4, 3))
    U = context.decomposition.eigenvectors

    worst = 0.0
    for basis in ALL_BASES:
        for K in range(1, 11):
            V_P = context.basis_matrix(basis, K)
            theta = rng.standard_normal(K + 1)
            spectral = U @ (V_P.response(theta)[:, None] * (U.T @ H @ W))
            spatial = spatial_filter(context.adjacency, V_P.basis, theta, H, W)
            scale = max(1.0, float(np.max(np.abs(spectral))))
            worst = max(worst, float(np.max(np.abs(spatial - spectral))) / scale)
    return CheckResult("spatial_spectral_equivalence", worst <= 1e-8, worst, 1e-8, "all bases, K = 1..10")

def check_fourier_invariance(samples: int = 10_000) -> CheckResult:
    graph = random_graph(40, 0.15, 1, 2, seed=11)
    context = SpectralContext.from_graph(graph)
    rng = np.random.default_rng(11)
    x = rng.standard_normal(40)
    V_P = context.basis_matrix("chebyshev", 5)
    U = context.decomposition.eigenvectors

    spatial = np.stack([U @ (V_P.response(rng.standard_normal(6)) * (U.T @ x)) for _ in range(16)])
    fourier = gft(context.decomposition, spatial.T, "forward").T

    mean_a, err_a = ftgc_monte_carlo(spatial, samples, seed=1)
    mean_b, err_b = ftgc_monte_carlo(fourier, samples, seed=2)
    combined = float(np.sqrt(err_a ** 2 + err_b ** 2))
    gap = abs(mean_a - mean_b)
    return CheckResult("fourier_invariance", gap <= 3.0 * combined, gap, 3.0 * combined, "16-function set, 10^4 samples")

def check_relu_lipschitz(pairs: int = 10_000) -> CheckResult:
    """relu applied in the vertex domain is 1-Lipschitz on spectral coefficients"""
    graph = random_graph(12, 0.3, 1, 2, seed=3)
    U = eigendecompose(build_normalized_adjacency(graph)).eigenvectors
    rng = np.random.default_rng(3)
    X = rng.standard_normal((pairs, graph.n, 3))
    Y = rng.standard_normal((pairs, graph.n, 3))
    relu_gap = np.maximum(U @ X, 0.0) - np.maximum(U @ Y, 0.0)
    inside = np.linalg.norm((U.T @ relu_gap).reshape(pairs, -1), axis=1)
    outside = np.linalg.norm((X - Y).reshape(pairs, -1), axis=1)
    slack = float(np.min(outside - inside))
    return CheckResult("relu_lipschitz", slack >= -1e-12, slack, -1e-12, f"{pairs} random pairs, n={graph.n}")

def check_jacobian_closed_form() -> CheckResult:
    graph = random_graph(30, 0.2, 4, 2, seed=5)
    context = SpectralContext.from_graph(graph)
    model = ModelConfig(in_dim=4, hidden_dim=4, num_classes=2, order=4, basis="legendre", seed=5)
    params = init_model(model, 5)
    params.thetas[0] = np.random.default_rng(5).standard_normal(5)
    V_P = context.basis_matrix(model.filter_basis, model.order)
    H0 = core_input(params, graph.features)

    measured = true_jacobian_norm(params, context.decomposition, V_P, H0, activation="identity", tol=1e-13, max_iter=200_000)
    exact = closed_form_jacobian_norm(params.W_mid[0], V_P.response(params.thetas[0]))
    error = abs(measured - exact) / exact
    return CheckResult("jacobian_closed_form", error <= 1e-6, error, 1e-6, "identity activation, one layer")

def check_trained_jacobian_soundness() -> CheckResult:
    graph = generate_sbm(3, 20, 0.3, 0.05, 4, 1.0, seed=0)
    split = make_split(graph.labels, per_class=5, seed=0)
    context = SpectralContext.from_graph(graph)
    worst = -np.inf
    for basis, architecture in product(ALL_BASES, ("wrapped", "plain")):
        model = ModelConfig(
            hidden_dim=8, order=4, basis=basis, architecture=architecture,
            num_filter_layers=2, activation="relu", max_epochs=40, patience=40
        )
        result = train(model, graph, split, seed=0, context=context)
        V_P = context.basis_matrix(result.config.filter_basis, result.config.order)
        inputs = model_bound_inputs(result.params, context, V_P, split.num_labelled, result.measured_norms)
        H0 = core_input(result.params, graph.features)
        measured = true_jacobian_norm(result.params, context.decomposition, V_P, H0, activation=result.config.layer_activations)
        worst = max(worst, measured - jacobian_norm_bound(inputs))
    return CheckResult("jacobian_soundness", worst <= 0.0, float(worst), 0.0, "trained relu models, all bases, wrapped and plain")

def check_bound_ordering(trials: int = 200) -> CheckResult:
    rng = np.random.default_rng(9)
    graph = random_graph(50, 0.1, 1, 2, seed=9)
    context = SpectralContext.from_graph(graph)
    violations = 0
    worst_decomposition = 0.0
    for trial in range(trials):
        basis = ALL_BASES[trial % len(ALL_BASES)]
        K = int(rng.integers(1, 11))
        L = int(rng.integers(1, 5))
        inputs = BoundInputs(
            basis_matrix=context.basis_matrix(basis, K),
            energy=rng.random(50) * 3.0,
            C_W=rng.uniform(0.1, 3.0, L),
            C_theta=rng.uniform(0.1, 3.0, L),
            n=50,
            m=10
        )
        nonlinear = ftgc_nonlinear_bound(inputs)
        if ftgc_linear_bound(inputs) > nonlinear.value / np.sqrt(inputs.n) * (1 + 1e-12):
            violations += 1
        product = nonlinear.weight_term * nonlinear.spectral_term
        worst_decomposition = max(worst_decomposition, abs(product - nonlinear.value) / nonlinear.value)
    passed = violations == 0 and worst_decomposition <= 1e-12
    return CheckResult("bound_ordering", passed, float(violations), 0.0, f"decomposition rel error {worst_decomposition:.3e}")

def check_split_sizes() -> CheckResult:
    labels = np.repeat(np.arange(3), 50)
    first = make_split(labels, per_class=10, val_frac=0.35, seed=4)
    second = make_split(labels, per_class=10, val_frac=0.35, seed=4)
    sizes = (first.train_idx.size, first.val_idx.size, first.test_idx.size)
    same = all(np.array_equal(a, b) for a, b in zip(
        (first.train_idx, first.val_idx, first.test_idx),
        (second.train_idx, second.val_idx, second.test_idx)
    ))
    passed = sizes == (30, 42, 78) and same
    return CheckResult("split_sizes", passed, float(sum(sizes)), 150.0, f"train/val/test = {sizes}")

def check_training_determinism() -> CheckResult:
    graph = generate_sbm(2, 15, 0.4, 0.05, 3, 1.0, seed=2)
    split = make_split(graph.labels, per_class=5, seed=2)
    model = ModelConfig(hidden_dim=4, order=3, dropout1=0.2, dropout2=0.2, max_epochs=20, patience=20)
    first = train(model, graph, split, seed=2)
    second = train(model, graph, split, seed=2)
    same = all(np.array_equal(a, b) for a, b in zip(first.params.as_dict().values(), second.params.as_dict().values()))
    difference = abs(first.gap - second.gap)
    return CheckResult("training_determinism", same and difference == 0.0, difference, 0.0, "two runs, same seed")

CHECKS: List[Callable[[], CheckResult]] = [
    check_amplification_endpoints,
    check_chebyshev_midpoint,
    check_eigendecomposition,
    check_path_spectrum,
    check_gradients,
    check_spatial_spectral,
    check_fourier_invariance,
    check_relu_lipschitz,
    check_jacobian_closed_form,
    check_trained_jacobian_soundness,
    check_bound_ordering,
    check_split_sizes,
    check_training_determinism,
]

def run_selftest() -> List[CheckResult]:
    results = []
    for check in CHECKS:
        try:
            result = check()
        except WorkbenchError as e:
            result = CheckResult(check.__name__.replace("check_", ""), False, float("nan"), float("nan"), f"{type(e).__name__}: {e}")
        level = "INFO" if result.passed else "ERROR"
        logger.log(level, f"selftest {result.name}: {'ok' if result.passed else 'FAILED'} ({result.detail})")
        results.append(result)
    return results
