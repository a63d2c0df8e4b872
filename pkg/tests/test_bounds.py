import numpy as np
import pytest
from src.basis import BasisKind, vandermonde
from src.bounds import (
    C_GC,
    BoundInputs,
    compute_bound_report,
    depth_curve,
    ftgc_linear_bound,
    ftgc_monte_carlo,
    ftgc_nonlinear_bound,
    gap_bound,
    jacobian_norm_bound,
    model_bound_inputs,
    report_for_model,
    spectral_energy,
    true_jacobian_norm,
)
from src.exceptions import BoundInputError
from src.graph import gft
from src.network import ModelConfig, SpectralContext, core_input, init_model, train

ALL_BASES = [kind.value for kind in BasisKind]

def unit_inputs(basis="bernstein", K=0, n=10, energy=None, **overrides) -> BoundInputs:
    eigenvalues = np.linspace(-1.0, 1.0, n)
    settings = dict(
        basis_matrix=vandermonde(basis, K, eigenvalues),
        energy=np.ones(n) if energy is None else energy,
        C_W=[1.0],
        C_theta=[1.0],
        n=n,
        m=n // 2
    )
    settings.update(overrides)
    return BoundInputs(**settings)

def test_spectral_energy_examples():
    assert np.array_equal(spectral_energy(np.eye(4)), np.ones(4))
    assert np.array_equal(spectral_energy(np.zeros((3, 2))), np.zeros(3))
    assert np.array_equal(spectral_energy(np.array([3.0, -2.0])), [9.0, 4.0])

def test_spectral_energy_parseval(random_instance):
    graph, context = random_instance
    H = np.random.default_rng(5).standard_normal((graph.n, 4))
    energy = spectral_energy(gft(context.decomposition, H, "forward"))
    assert energy.sum() == pytest.approx(np.linalg.norm(H) ** 2, rel=1e-8)

def test_bound_inputs_validation():
    with pytest.raises(BoundInputError):
        unit_inputs(energy=-np.ones(10))
    with pytest.raises(BoundInputError):
        unit_inputs(energy=np.ones(9))
    with pytest.raises(BoundInputError):
        unit_inputs(C_W=[1.0, 1.0])
    with pytest.raises(BoundInputError):
        unit_inputs(m=10)
    with pytest.raises(BoundInputError):
        unit_inputs(delta=1.0)
    inputs = unit_inputs(C_W=np.array([2.0]))
    assert inputs.C_W == (2.0,) and inputs.L == 1 and inputs.u == 5

def test_nonlinear_bound_of_zero_energy_is_zero():
    assert ftgc_nonlinear_bound(unit_inputs("chebyshev", 4, energy=np.zeros(10))).value == 0.0

def test_nonlinear_bound_unit_bernstein_is_one():
    terms = ftgc_nonlinear_bound(unit_inputs())
    assert terms.value == pytest.approx(1.0, abs=1e-12)
    assert terms.weight_term == 1.0

def test_doubling_one_weight_constant_doubles_bound():
    base = unit_inputs("legendre", 3, C_W=[0.7, 1.3], C_theta=[0.9, 1.1])
    doubled = unit_inputs("legendre", 3, C_W=[0.7, 2.6], C_theta=[0.9, 1.1])
    assert ftgc_nonlinear_bound(doubled).value == pytest.approx(2 * ftgc_nonlinear_bound(base).value, rel=1e-12)

def test_nonlinear_bound_decomposes_into_weight_and_spectral_terms():
    inputs = unit_inputs("chebyshev", 6, energy=np.arange(10.0), C_W=[1.5, 0.5], C_theta=[2.0, 3.0])
    terms = ftgc_nonlinear_bound(inputs)
    assert terms.weight_term * terms.spectral_term == pytest.approx(terms.value, rel=1e-12)
    assert terms.weight_term == pytest.approx(1.5 * 2.0 * 0.5 * 3.0)

def test_linear_bound_at_depth_one_matches_nonlinear():
    inputs = unit_inputs("chebyshev", 5, energy=np.arange(1.0, 11.0), C_W=[1.7], C_theta=[0.4])
    expected = ftgc_nonlinear_bound(inputs, alpha=1.0).value / np.sqrt(inputs.n)
    assert ftgc_linear_bound(inputs) == pytest.approx(expected, rel=1e-12)

def test_linear_bound_closed_form_for_uniform_rows():
    inputs = unit_inputs(energy=np.full(10, 4.0), C_W=[2.0, 3.0], C_theta=[0.5, 1.0])
    # Bernstein K=0 rows have unit norm
    assert ftgc_linear_bound(inputs) == pytest.approx(3.0 * np.sqrt(4.0) / np.sqrt(10), rel=1e-12)

@pytest.mark.parametrize("seed", range(20))
def test_linear_bound_never_exceeds_scaled_nonlinear(seed):
    rng = np.random.default_rng(seed)
    L = int(rng.integers(1, 5))
    inputs = unit_inputs(
        ALL_BASES[seed % 4], int(rng.integers(1, 11)), n=30,
        energy=rng.random(30) * 5.0,
        C_W=rng.uniform(0.1, 3.0, L),
        C_theta=rng.uniform(0.1, 3.0, L)
    )
    assert ftgc_linear_bound(inputs) <= ftgc_nonlinear_bound(inputs, alpha=1.0).value / np.sqrt(30) * (1 + 1e-12)

def test_gap_bound_examples():
    inputs = unit_inputs(n=100, C1=0.0, C2=0.0)
    assert gap_bound(0.0, inputs).total == 0.0

    terms = gap_bound(1.0, unit_inputs(n=100))
    assert terms.complexity_term == pytest.approx(4 * np.sqrt(np.pi / 2), rel=1e-12)
    assert terms.complexity_term == pytest.approx(5.0133, abs=1e-4)
    assert terms.partition_term == pytest.approx(100 * np.sqrt(50) / 2500)
    assert C_GC == pytest.approx(np.sqrt(np.pi / 2))

def test_gap_confidence_term_vanishes_as_delta_approaches_one():
    near_one = gap_bound(1.0, unit_inputs(n=100, delta=1 - 1e-12))
    assert near_one.confidence_term < 1e-6
    assert gap_bound(1.0, unit_inputs(n=100, delta=0.01)).confidence_term > near_one.confidence_term

def test_jacobian_bound_examples():
    assert jacobian_norm_bound(unit_inputs()) == pytest.approx(1.0)
    chebyshev = unit_inputs("chebyshev", 10, C_W=[1.0, 1.0], C_theta=[1.0, 1.0])
    assert jacobian_norm_bound(chebyshev) == pytest.approx(11.0, rel=1e-12)

def test_jacobian_bound_is_monotone():
    base = jacobian_norm_bound(unit_inputs("legendre", 3, C_W=[1.0, 2.0], C_theta=[0.5, 0.5]))
    assert jacobian_norm_bound(unit_inputs("legendre", 3, C_W=[1.1, 2.0], C_theta=[0.5, 0.5])) > base
    assert jacobian_norm_bound(unit_inputs("legendre", 3, C_W=[1.0, 2.0], C_theta=[0.5, 0.6])) > base
    assert jacobian_norm_bound(unit_inputs("legendre", 3, C_W=[1.0, 2.0], C_theta=[0.5, 0.5], alpha=1.2)) > base

def linear_core(random_instance):
    graph, context = random_instance
    model = ModelConfig(in_dim=3, hidden_dim=4, num_classes=2, order=4, basis="legendre")
    params = init_model(model, 5)
    params.thetas[0] = np.random.default_rng(5).standard_normal(5)
    V_P = context.basis_matrix(model.filter_basis, model.order)
    return params, context, V_P, core_input(params, graph.features)

def test_true_jacobian_of_linear_layer_has_closed_form(random_instance):
    params, context, V_P, H0 = linear_core(random_instance)
    measured = true_jacobian_norm(params, context.decomposition, V_P, H0, activation="identity", tol=1e-13, max_iter=200_000)
    exact = np.linalg.norm(params.W_mid[0], 2) * np.max(np.abs(V_P.response(params.thetas[0])))
    assert measured == pytest.approx(exact, rel=1e-6)

def test_true_jacobian_of_zero_weights_is_zero(random_instance):
    params, context, V_P, H0 = linear_core(random_instance)
    params.W_mid[0] = np.zeros_like(params.W_mid[0])
    assert true_jacobian_norm(params, context.decomposition, V_P, H0) == 0.0

@pytest.mark.parametrize("basis", ALL_BASES)
def test_true_jacobian_stays_below_bound_after_training(basis, small_sbm, small_split):
    model = ModelConfig(hidden_dim=8, order=4, basis=basis, num_filter_layers=2, activation="relu", max_epochs=30, patience=30)
    result = train(model, small_sbm, small_split, seed=1)
    context = SpectralContext.from_graph(small_sbm)
    V_P = context.basis_matrix(result.config.filter_basis, result.config.order)

    report = report_for_model(result.params, result.config, context, V_P, small_split.num_labelled, result.measured_norms)
    assert report.true_jacobian <= report.jacobian_bound
    assert report.jacobian_ratio >= 1.0

def test_monte_carlo_single_function_is_centered():
    f = np.random.default_rng(0).standard_normal(30)
    estimate, error = ftgc_monte_carlo(f[None, :], 20_000, seed=4)
    assert abs(estimate) <= 3 * error

def test_monte_carlo_symmetric_pair_matches_half_normal_mean():
    f = np.random.default_rng(1).standard_normal(25)
    estimate, error = ftgc_monte_carlo([f, -f], 20_000, seed=5)
    expected = np.linalg.norm(f) * np.sqrt(2 / np.pi) / 25
    assert abs(estimate - expected) <= 3 * error

def test_monte_carlo_is_invariant_under_fourier_transform(random_instance):
    graph, context = random_instance
    rng = np.random.default_rng(6)
    functions = rng.standard_normal((8, graph.n))
    fourier = gft(context.decomposition, functions.T, "forward").T
    first, first_error = ftgc_monte_carlo(functions, 10_000, seed=1)
    second, second_error = ftgc_monte_carlo(fourier, 10_000, seed=2)
    assert abs(first - second) <= 3 * np.hypot(first_error, second_error)

def test_monte_carlo_rejects_bad_inputs():
    with pytest.raises(BoundInputError):
        ftgc_monte_carlo(np.zeros((0, 3)), 10)
    with pytest.raises(BoundInputError):
        ftgc_monte_carlo(np.ones((1, 3)), 1)

def test_depth_curve_repeats_first_layer():
    inputs = unit_inputs("chebyshev", 10, C_W=[2.0], C_theta=[0.5])
    rows = depth_curve(inputs, range(1, 5), adjacency_inf_norm=2.0)
    assert [row["depth"] for row in rows] == [1, 2, 3, 4]
    for row in rows:
        assert row["jacobian_bound"] == pytest.approx(np.sqrt(11) ** row["depth"], rel=1e-12)
        assert row["spatial_proxy"] == 2.0 ** row["depth"]
    assert rows[0]["ftgc_nonlinear"] == pytest.approx(ftgc_nonlinear_bound(inputs).value)

def test_bound_report_record():
    inputs = unit_inputs("chebyshev", 3, n=20, energy=np.ones(20))
    report = compute_bound_report(inputs, true_jacobian=2.0, wrapper_prefactor=3.0)
    record = report.to_record()
    assert record["gap_bound"] == pytest.approx(report.gap.total)
    assert record["jacobian_ratio"] == pytest.approx(report.jacobian_bound / 2.0)
    assert record["wrapper_prefactor"] == 3.0
    assert {"gap_complexity_term", "gap_partition_term", "gap_confidence_term"} <= set(record)
    assert compute_bound_report(inputs).jacobian_ratio is None

def test_model_bound_inputs_use_core_input_energy(random_instance):
    graph, context = random_instance
    model = ModelConfig(in_dim=3, hidden_dim=4, num_classes=2, order=3)
    params = init_model(model, 0)
    V_P = context.basis_matrix(model.filter_basis, model.order)
    inputs = model_bound_inputs(params, context, V_P, labelled=6)
    H0 = core_input(params, graph.features)
    assert inputs.energy.sum() == pytest.approx(np.linalg.norm(H0) ** 2, rel=1e-10)
    assert inputs.n == graph.n and inputs.m == 6
