import numpy as np
import pytest
from scipy import integrate, stats
from src.config import config
from src.exceptions import ConfigError, GraphValidationError, SplitError, StatisticsError
from src.network import ModelConfig
from src.services import (
    Candidate,
    SbmParams,
    SweepRow,
    correlate,
    generate_sbm,
    jacobian_tightness,
    make_split,
    mean_ci,
    paired_test,
    parse_order_range,
    regularizer_ablation,
    rows_frame,
    run_sweep,
    sbm_from_params,
    search_candidates,
    significance_stars,
    sweep_summary,
)
from src.services.selftest import (
    CHECKS,
    check_bound_ordering,
    check_chebyshev_midpoint,
    check_path_spectrum,
    check_relu_lipschitz,
    check_split_sizes,
)

FAST_TRAINING = ModelConfig(hidden_dim=4, max_epochs=15, patience=15)

def test_sbm_with_certain_edges_gives_two_triangles():
    graph = generate_sbm(2, 3, 1.0, 0.0, 2, 1.0, seed=0)
    assert graph.n == 6
    edges = {tuple(edge) for edge in graph.edges.tolist()}
    assert edges == {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}

def test_sbm_intra_block_edge_count_is_binomial():
    blocks, size, p_in = 2, 10, 0.3
    counts = []
    for seed in range(200):
        graph = generate_sbm(blocks, size, p_in, 0.05, 2, 1.0, seed=seed)
        same = graph.labels[graph.edges[:, 0]] == graph.labels[graph.edges[:, 1]]
        counts.append(int(same.sum()))
    trials = blocks * size * (size - 1) // 2
    expected = p_in * trials
    sigma_of_mean = np.sqrt(trials * p_in * (1 - p_in) / len(counts))
    assert abs(np.mean(counts) - expected) <= 3 * sigma_of_mean

def test_sbm_without_signal_has_indistinguishable_means():
    p_values = []
    for seed in range(20):
        graph = generate_sbm(2, 40, 0.2, 0.05, 3, 0.0, seed=seed)
        first = graph.features[graph.labels == 0, 0]
        second = graph.features[graph.labels == 1, 0]
        p_values.append(stats.ttest_ind(first, second).pvalue)
    assert np.mean(p_values) > 0.01

def test_sbm_is_deterministic_and_validated():
    first = generate_sbm(3, 10, 0.4, 0.1, 3, 1.0, seed=9)
    second = generate_sbm(3, 10, 0.4, 0.1, 3, 1.0, seed=9)
    assert np.array_equal(first.edges, second.edges)
    assert np.array_equal(first.features, second.features)
    with pytest.raises(GraphValidationError):
        generate_sbm(3, 10, 1.5, 0.1, 3, 1.0, seed=0)
    with pytest.raises(GraphValidationError):
        generate_sbm(3, 10, 0.4, 0.1, 2, 1.0, seed=0)

def test_sbm_params_parsing():
    assert SbmParams.parse("default") == SbmParams()
    hetero = SbmParams.parse("heterophilous")
    assert hetero.heterophilous and hetero.p_in < hetero.p_out
    assert hetero.name.startswith("sbm-hetero-")

    custom = SbmParams.parse("default,blocks=2,per-block=15,feature_dim=4")
    assert (custom.blocks, custom.per_block, custom.feature_dim) == (2, 15, 4)
    assert sbm_from_params(custom, seed=0).n == 30

    with pytest.raises(ConfigError):
        SbmParams.parse("swirly")
    with pytest.raises(ConfigError):
        SbmParams.parse("p_in=0.01,p_out=0.5")
    with pytest.raises(ConfigError):
        SbmParams.parse("colour=red")

def test_split_sizes_and_determinism():
    labels = np.repeat(np.arange(3), 50)
    split = make_split(labels, per_class=10, val_frac=0.35, seed=4)
    assert split.sizes() == {"train": 30, "val": 42, "test": 78}
    again = make_split(labels, per_class=10, val_frac=0.35, seed=4)
    assert np.array_equal(split.val_idx, again.val_idx)
    assert not np.array_equal(split.train_idx, make_split(labels, per_class=10, seed=5).train_idx)

def test_split_is_disjoint_and_stratified():
    labels = np.repeat(np.arange(4), [12, 20, 15, 30])
    split = make_split(labels, per_class=10, seed=1)
    together = np.concatenate([split.train_idx, split.val_idx, split.test_idx])
    assert np.array_equal(np.sort(together), np.arange(labels.size))
    assert np.array_equal(np.bincount(labels[split.train_idx]), [10, 10, 10, 10])
    assert split.num_labelled == 40
    assert np.all(np.diff(split.test_idx) > 0)

def test_split_errors():
    with pytest.raises(SplitError):
        make_split(np.repeat(np.arange(2), [5, 20]), per_class=10)
    with pytest.raises(SplitError):
        make_split(np.zeros(10, dtype=int), per_class=0)
    with pytest.raises(SplitError):
        make_split(np.zeros(20, dtype=int), per_class=5, val_frac=1.5)

def test_correlation_of_affine_data_is_perfect():
    xs = np.arange(10.0)
    report = correlate(xs, 2 * xs + 1)
    assert report.pearson_r == pytest.approx(1.0)
    assert report.spearman_rho == pytest.approx(1.0)
    assert report.fisher_ci_low <= report.pearson_r <= report.fisher_ci_high

def test_monotone_nonlinear_correlation():
    xs = np.linspace(0, 5, 12)
    report = correlate(xs, np.exp(xs))
    assert report.spearman_rho == pytest.approx(1.0)
    assert report.pearson_r < 1.0

def test_spearman_on_hand_dataset():
    # ranks of y: 2,1,4,3,5 -> sum of squared rank differences is 4
    report = correlate([1, 2, 3, 4, 5], [2, 1, 4, 3, 5])
    assert report.spearman_rho == pytest.approx(0.8)
    assert report.n_points == 5
    assert report.fisher_ci_low < report.pearson_r < report.fisher_ci_high

def test_correlation_is_invariant_under_positive_affine_maps():
    rng = np.random.default_rng(0)
    xs, ys = rng.standard_normal(30), rng.standard_normal(30)
    base = correlate(xs, ys)
    moved = correlate(3 * xs - 2, 0.5 * ys + 7)
    assert moved.pearson_r == pytest.approx(base.pearson_r, abs=1e-12)
    assert moved.spearman_rho == pytest.approx(base.spearman_rho, abs=1e-12)

@pytest.mark.parametrize("xs, ys", [
    ([1, 2, 3], [1, 2, 3]),
    ([1, 2, 3, 4], [1, 2, 3]),
    ([1, 1, 1, 1], [1, 2, 3, 4]),
    ([1, 2, np.nan, 4], [1, 2, 3, 4]),
])
def test_correlation_errors(xs, ys):
    with pytest.raises(StatisticsError):
        correlate(xs, ys)

def test_paired_test_identical_vectors():
    result = paired_test([0.5, 0.6, 0.7], [0.5, 0.6, 0.7])
    assert result.delta_mean == 0.0
    assert result.p_value == 1.0
    assert result.stars == ""

def test_paired_test_constant_shift_is_degenerate():
    result = paired_test([0.25, 0.5, 0.75, 1.0], [1.25, 1.5, 1.75, 2.0])
    assert result.delta_mean == pytest.approx(1.0)
    assert result.degenerate
    assert result.stars == ""

def test_paired_test_float_shift_is_degenerate():
    base = np.array([0.1, 0.2, 0.3, 0.7, 0.9])
    # reg - base is 1 only up to rounding
    assert np.ptp(base + 1.0 - base) > 0.0
    result = paired_test(base, base + 1.0)
    assert result.degenerate
    assert result.p_value == 0.0
    assert result.delta_mean == pytest.approx(1.0)

def test_paired_test_matches_integrated_t_distribution():
    base = np.array([0.71, 0.69, 0.74, 0.70, 0.68, 0.73, 0.72, 0.70, 0.69, 0.71])
    reg = np.array([0.73, 0.70, 0.75, 0.73, 0.69, 0.75, 0.72, 0.73, 0.70, 0.74])
    diff = reg - base
    t = diff.mean() / (diff.std(ddof=1) / np.sqrt(diff.size))
    tail, _ = integrate.quad(lambda x: stats.t.pdf(x, df=diff.size - 1), abs(t), np.inf)

    result = paired_test(base, reg)
    assert result.p_value == pytest.approx(2 * tail, rel=1e-6)
    assert result.delta_mean == pytest.approx(diff.mean())
    assert result.stars == significance_stars(result.p_value)

def test_significance_stars():
    assert [significance_stars(p) for p in (0.0005, 0.005, 0.03, 0.2)] == ["***", "**", "*", ""]

def test_mean_ci():
    mean, half_width = mean_ci([1.0, 2.0, 3.0])
    assert mean == pytest.approx(2.0)
    assert half_width == pytest.approx(stats.t.ppf(0.975, 2) * 1.0 / np.sqrt(3))
    assert np.isnan(mean_ci([4.0])[1])
    with pytest.raises(StatisticsError):
        mean_ci([])

def test_parse_order_range():
    assert parse_order_range("1..4") == [1, 2, 3, 4]
    assert parse_order_range("2, 5,7") == [2, 5, 7]
    with pytest.raises(ValueError):
        parse_order_range("5..1")

def test_sweep_produces_one_row_per_configuration(small_sbm):
    streamed = []
    rows = run_sweep([("sbm", small_sbm)], ["chebyshev"], [1, 2], [1], [0], FAST_TRAINING, on_row=streamed.append)
    assert len(rows) == 2
    assert streamed == rows
    assert [row.K for row in rows] == [1, 2]
    for row in rows:
        assert row.ok, row.error
        assert row.gap == pytest.approx(row.test_loss - row.train_loss)
        assert row.true_jacobian <= row.jacobian_bound
        assert row.m == 30 and row.n == 60

def test_sweep_reruns_are_identical(small_sbm):
    first = run_sweep([("sbm", small_sbm)], ["legendre", "bernstein"], [2], [1, 2], [3], FAST_TRAINING)
    second = run_sweep([("sbm", small_sbm)], ["legendre", "bernstein"], [2], [1, 2], [3], FAST_TRAINING, jobs=2)
    assert rows_frame(first).equals(rows_frame(second))

def test_plain_sweep_rows(small_sbm):
    plain = FAST_TRAINING.with_updates(architecture="plain", activation="relu")
    rows = run_sweep([("sbm", small_sbm)], ["bernstein", "chebyshev"], [3], [2], [0], plain)
    for row in rows:
        assert row.ok, row.error
        assert np.isnan(row.W_in_norm) and np.isnan(row.W_out_norm)
        assert row.true_jacobian <= row.jacobian_bound

def test_sweep_records_failures_per_row(small_sbm):
    # too few nodes per class for the default split
    tiny = generate_sbm(2, 6, 0.5, 0.1, 2, 1.0, seed=0)
    rows = run_sweep([("tiny", tiny), ("sbm", small_sbm)], ["monomial"], [1], [1], [0], FAST_TRAINING)
    assert not rows[0].ok and "SplitError" in rows[0].error
    assert np.isnan(rows[0].gap)
    assert rows[1].ok

def test_sweep_summary(small_sbm):
    rows = run_sweep([("sbm", small_sbm)], ["chebyshev", "monomial"], [1, 2, 3], [1], [0, 1], FAST_TRAINING)
    summary = sweep_summary(rows + [SweepRow(dataset="sbm", basis="chebyshev", K=9, L=1, seed=0, error="boom")])
    assert summary["rows"] == 13
    assert summary["failed_rows"] == 1
    assert set(summary["correlations"]) == {"ftgc_nonlinear", "ftgc_linear", "weight_term", "spectral_term", "gap_bound"}
    assert set(summary["by_basis"]) == {"chebyshev", "monomial"}
    checks = summary["checks"]
    assert checks["jacobian_violations"] == 0
    assert checks["ordering_violations"] == 0
    assert checks["decomposition_max_rel_error"] <= 1e-12
    assert checks["min_jacobian_ratio"] >= 1.0

def test_search_candidates():
    assert search_candidates(trials=0) == [Candidate()]
    space = {"lr": [0.01, 0.1], "hidden_dim": [4, 8, 16]}
    grid = search_candidates(space, trials=100)
    assert len(grid) == 6
    assert grid[0].overrides == (("hidden_dim", 4), ("lr", 0.01))
    sample = search_candidates(space, trials=3, seed=1)
    assert len(sample) == 3 and sample == search_candidates(space, trials=3, seed=1)
    assert set(sample) <= set(grid)
    assert Candidate().describe() == "defaults"
    assert grid[0].apply(FAST_TRAINING, 0.5).hidden_dim == 4

def test_ablation_with_zero_only_grid_has_no_effect(small_sbm):
    result = regularizer_ablation("sbm", small_sbm, ["chebyshev", "legendre"], [0, 1], [0.0], FAST_TRAINING)
    assert len(result.rows) == 2
    assert len(result.splits) == 2 * 2 * 2
    for row in result.rows:
        assert row.base_acc == row.reg_acc
        assert row.base_gap == row.reg_gap
        assert row.delta_acc == 0.0 and row.delta_gap == 0.0
        assert row.best_lambda == 0.0
        assert not row.error

def test_ablation_row_fields(small_sbm):
    result = regularizer_ablation("sbm", small_sbm, ["chebyshev"], [0, 1, 2], [0.0, 0.5], FAST_TRAINING, jobs=2)
    row = result.rows[0]
    assert row.splits == 3
    assert row.best_lambda in (0.0, 0.5)
    reg = [outcome for outcome in result.splits if outcome.variant == "reg"]
    assert all(outcome.lambda_ew == row.best_lambda for outcome in reg)
    assert row.reg_acc == pytest.approx(np.mean([outcome.test_acc for outcome in reg]))

def test_ablation_configuration_errors(small_sbm):
    with pytest.raises(ConfigError):
        regularizer_ablation("sbm", small_sbm, ["chebyshev"], [0, 1], [0.1, 1.0], FAST_TRAINING)
    with pytest.raises(ConfigError):
        regularizer_ablation("sbm", small_sbm, ["chebyshev"], [0], [0.0], FAST_TRAINING)

def test_jacobian_tightness(small_sbm):
    seen = []
    rows = jacobian_tightness(small_sbm, FAST_TRAINING, orders=[1, 3], depth=2, on_row=seen.append)
    assert [row.K for row in rows] == [1, 3]
    assert seen == rows
    for row in rows:
        assert not row.error
        assert row.basis == "monomial" and row.L == 2
        assert row.true_jacobian <= row.jacobian_bound
        assert row.ratio >= 1.0

@pytest.mark.parametrize("check", [
    check_chebyshev_midpoint,
    check_path_spectrum,
    check_relu_lipschitz,
    check_bound_ordering,
    check_split_sizes,
])
def test_fast_selftest_checks_pass(check):
    result = check()
    assert result.passed, result.detail

@pytest.mark.slow
@pytest.mark.parametrize("check", CHECKS, ids=lambda check: check.__name__)
def test_every_selftest_check_passes(check):
    result = check()
    assert result.passed, result.detail

@pytest.mark.slow
def test_default_sweep_bound_tracks_gap():
    graph = sbm_from_params(SbmParams.parse("default"), config.DEFAULT_SEED)
    model = ModelConfig(architecture="plain", activation="relu", num_filter_layers=2)
    seeds = list(range(config.DEFAULT_SEED, config.DEFAULT_SEED + 10))
    rows = run_sweep([("sbm", graph)], config.BASES, list(range(1, 11)), [2], seeds, model, jobs=config.SWEEP_JOBS)
    summary = sweep_summary(rows)
    assert summary["failed_rows"] == 0
    report = summary["correlations"]["ftgc_nonlinear"]
    assert report["pearson_r"] > 0.0
    assert report["fisher_ci_low"] > 0.0

@pytest.mark.slow
def test_regularizer_does_not_widen_chebyshev_gap():
    graph = sbm_from_params(SbmParams.parse("default"), config.DEFAULT_SEED)
    seeds = list(range(config.DEFAULT_SEED, config.DEFAULT_SEED + 10))
    result = regularizer_ablation("sbm", graph, ["chebyshev"], seeds, [0.0] + config.LAMBDA_GRID, ModelConfig())
    row = result.rows[0]
    assert not row.error
    assert row.reg_gap <= row.base_gap
