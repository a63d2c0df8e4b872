#!/usr/bin/env python3
"""
Spectral Workbench - polynomial spectral GNN filters and their generalization bounds

Amplification profiles, bound reports, training, bound-vs-gap sweeps, regularizer
ablations and Jacobian checks on small graphs, all seeded and written under --out.
"""

import sys
from functools import wraps
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import click
import numpy as np
from click.core import ParameterSource
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from src.basis import Basis, amplification_profile, dense_grid, max_amplification
from src.bounds import depth_curve, model_bound_inputs, report_for_model
from src.config import config
from src.exceptions import ConfigError, ShapeMismatchError, WorkbenchError
from src.graph import Graph, infinity_norm
from src.models import database_url
from src.network import ModelConfig, SpectralContext, load_checkpoint, save_checkpoint, train
from src.parsers import load_graph_bundle, parse_config_file
from src.services import (
    AblationRow,
    CheckResult,
    SbmParams,
    SweepRow,
    TightnessRow,
    jacobian_tightness,
    make_split,
    parse_order_range,
    regularizer_ablation,
    run_selftest,
    run_sweep,
    sbm_from_params,
    sweep_summary,
)
from src.services.ablation_service import SplitOutcome
from src.storage import CsvStream, SweepStorage, write_csv, write_json, write_manifest
from src.utils import add_file_sink, logger, remove_file_sink, setup_logger

console = Console()

MODEL_OPTION_FIELDS = {
    "basis": "basis",
    "order": "order",
    "layers": "num_filter_layers",
    "lambda_ew": "lambda_ew",
    "rescaled": "rescaled",
    "architecture": "architecture",
    "activation": "activation",
    "seed": "seed",
}

CONFIG_ALIASES = {"seeds": "seed_count", "config": "config_file"}

# Resolution of flags, config file and defaults

def resolve_settings(ctx: click.Context) -> Tuple[Dict[str, object], Dict[str, str]]:
    """Command settings with precedence flags > config file > defaults.

    Returns the resolved option values and the config-file entries that target
    ModelConfig fields without a matching flag.
    """
    settings = dict(ctx.params)
    config_path = settings.get("config_file")
    if not config_path:
        return settings, {}

    file_values = parse_config_file(config_path)
    options = {param.name: param for param in ctx.command.params}
    model_values = {}

    for key, raw in file_values.items():
        key = CONFIG_ALIASES.get(key, key)
        if key in options and key != "config_file":
            if ctx.get_parameter_source(key) is ParameterSource.DEFAULT:
                try:
                    settings[key] = options[key].type_cast_value(ctx, raw)
                except click.BadParameter as e:
                    raise ConfigError(f"Config key '{key}': {e.format_message()}")
        elif key in ModelConfig.model_fields:
            model_values[key] = raw
        else:
            raise ConfigError(f"Unknown config key '{key}'")

    settings["_from_file"] = sorted(CONFIG_ALIASES.get(key, key) for key in file_values if CONFIG_ALIASES.get(key, key) in options)
    return settings, model_values

def build_model_config(ctx: click.Context, settings: Dict[str, object], model_values: Dict[str, str], **overrides) -> ModelConfig:
    """ModelConfig from defaults, then config-file fields, then explicit options"""
    from_file = set(settings.get("_from_file", []))
    defaults, explicit = {}, {}
    for option, field in MODEL_OPTION_FIELDS.items():
        if option not in settings or settings[option] is None:
            continue
        is_default = ctx.get_parameter_source(option) is ParameterSource.DEFAULT and option not in from_file
        (defaults if is_default else explicit)[field] = settings[option]

    values = {**defaults, **model_values, **explicit, **overrides}
    try:
        return ModelConfig(**values)
    except ValidationError as e:
        error = e.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        raise ConfigError(f"Invalid model setting '{location}': {error['msg']}")

def resolve_graph(settings: Dict[str, object], seed: int) -> Graph:
    if settings.get("graph"):
        return load_graph_bundle(settings["graph"], allow_self_loops=bool(settings.get("allow_self_loops")))
    return sbm_from_params(SbmParams.parse(settings.get("sbm") or "default"), seed)

def parse_bases(text: str) -> List[Basis]:
    names = config.BASES if text.strip().lower() == "all" else [part.strip() for part in text.split(",") if part.strip()]
    try:
        return [Basis.parse(name) for name in names]
    except WorkbenchError as e:
        raise click.BadParameter(str(e), param_hint="--bases")

def parse_orders(text: str, hint: str) -> List[int]:
    try:
        orders = parse_order_range(text)
    except ValueError as e:
        raise click.BadParameter(f"expected 'a..b' or a comma list ({e})", param_hint=hint)
    if not orders or min(orders) < 0:
        raise click.BadParameter("orders must be non-negative", param_hint=hint)
    return orders

def parse_floats(text: str, hint: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a comma list of numbers, got '{text}'", param_hint=hint)

def seed_list(seed: int, count: int) -> List[int]:
    if count <= 0:
        raise click.BadParameter("must be positive", param_hint="--seeds")
    return [seed + offset for offset in range(count)]

def prepare_output(command: str, settings: Dict[str, object], seed: int, model: ModelConfig = None) -> Path:
    """Create --out, attach the log file and write the manifest"""
    out_dir = config.create_directories(settings["out"])
    add_file_sink(out_dir)
    public = {key: value for key, value in settings.items() if not key.startswith("_")}
    if model is not None:
        public.update({f"model.{key}": value for key, value in model.model_dump(mode="json").items()})
    write_manifest(out_dir, command, public, seed)
    logger.info(f"{command}: writing results to {out_dir}")
    return out_dir

# Shared options

def output_options(func: Callable) -> Callable:
    func = click.option("--config", "config_file", type=click.Path(dir_okay=False), default=None, help="key=value config file")(func)
    func = click.option("--out", "-o", type=click.Path(file_okay=False), default=str(config.RESULTS_DIR), show_default=True, help="Output directory")(func)
    func = click.option("--seed", type=int, default=config.DEFAULT_SEED, show_default=True, help="Top-level seed")(func)
    return func

def graph_options(func: Callable) -> Callable:
    func = click.option("--sbm", default=None, help="SBM preset or key=value list (default, heterophilous, blocks=3,...)")(func)
    func = click.option("--allow-self-loops", is_flag=True, default=False, help="Keep self-loop edges in a graph bundle")(func)
    func = click.option("--graph", type=click.Path(exists=True, file_okay=False), default=None, help="Graph bundle directory")(func)
    return func

def model_options(
    default_basis: str = "chebyshev",
    default_layers: int = 1,
    default_architecture: str = "wrapped",
    default_activation: str = "identity"
):
    def decorate(func: Callable) -> Callable:
        func = click.option("--activation", type=click.Choice(["relu", "identity"]), default=default_activation, show_default=True, help="Filter-layer activation")(func)
        func = click.option("--architecture", type=click.Choice(["wrapped", "plain"]), default=default_architecture, show_default=True, help="MLP-wrapped residual stack or bare filter stack")(func)
        func = click.option("--rescaled", is_flag=True, default=False, help="Divide the basis by sqrt(max amplification)")(func)
        func = click.option("--lambda-ew", "lambda_ew", type=float, default=0.0, show_default=True, help="Energy-weighted regularizer weight")(func)
        func = click.option("--layers", type=int, default=default_layers, show_default=True, help="Number of filter layers")(func)
        func = click.option("--order", "-k", type=int, default=config.DEFAULT_ORDER, show_default=True, help="Polynomial order K")(func)
        func = click.option("--basis", "-b", default=default_basis, show_default=True, help="Polynomial basis")(func)
        return func
    return decorate

def workbench_command(func: Callable) -> Callable:
    """Mutually exclusive --graph/--sbm check shared by the graph commands"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        if kwargs.get("graph") and kwargs.get("sbm"):
            raise click.UsageError("--graph and --sbm are mutually exclusive")
        return func(*args, **kwargs)
    return wrapper

# Commands

@click.group(invoke_without_command=True)
@click.option('--verbose', '-v', is_flag=True, help='Enable debug logging')
@click.pass_context
def cli(ctx: click.Context, verbose: bool):
    """Spectral Workbench - polynomial spectral filters, bounds and experiments"""
    if verbose:
        setup_logger("DEBUG")
        logger.debug("Verbose logging enabled")
    if ctx.invoked_subcommand is None:
        raise click.UsageError("Missing command (profile, bounds, train, sweep, ablate, jacobian, selftest)")

@cli.command()
@output_options
@click.option("--basis", "-b", default="chebyshev", show_default=True, help="Basis name or 'all'")
@click.option("--order", "-k", type=int, default=config.DEFAULT_ORDER, show_default=True, help="Polynomial order K")
@click.option("--rescaled", is_flag=True, default=False, help="Rescaled basis")
@click.option("--points", type=int, default=config.PROFILE_GRID_POINTS, show_default=True, help="Grid points on [-1, 1]")
@click.pass_context
def profile(ctx: click.Context, **_):
    """Amplification profile M_K(x) on a dense grid"""
    settings, _ = resolve_settings(ctx)
    bases = parse_bases(settings["basis"])
    if settings["order"] < 0:
        raise click.BadParameter("must be non-negative", param_hint="--order")
    if settings["points"] < 2:
        raise click.BadParameter("need at least 2 points", param_hint="--points")

    seed = settings["seed"]
    out_dir = prepare_output("profile", settings, seed)
    K = settings["order"]
    xs = dense_grid(settings["points"])

    records, summary = [], {}
    table = Table(title=f"Amplification profiles, K={K}")
    table.add_column("Basis", style="cyan")
    table.add_column("max M_K", style="yellow")
    table.add_column("analytic max", style="green")
    table.add_column("normalized M_K(0)", style="white")

    for basis in bases:
        basis = Basis.parse(basis, rescaled=settings["rescaled"])
        values = amplification_profile(basis, K, xs)
        normalized = amplification_profile(basis, K, xs, normalize=True)
        analytic = 1.0 if basis.rescaled else max_amplification(basis, K)
        at_zero = float(normalized[np.argmin(np.abs(xs))])
        for x, value, scaled in zip(xs, values, normalized):
            records.append({"basis": basis.name, "K": K, "x": x, "amplification": value, "normalized": scaled})

        summary[basis.name] = {"max": float(values.max()), "analytic_max": analytic, "normalized_at_zero": at_zero}
        table.add_row(basis.name, f"{values.max():.6g}", f"{analytic:.6g}", f"{at_zero:.6f}")

    write_csv(out_dir / "profile.csv", records, ["basis", "K", "x", "amplification", "normalized"])
    write_json(out_dir / "summary.json", {"command": "profile", "order": K, "profiles": summary}, seed)
    console.print(table)

@cli.command()
@output_options
@graph_options
@model_options()
@click.option("--checkpoint", type=click.Path(exists=True, dir_okay=False), default=None, help="Report on a saved model instead of training one")
@click.option("--max-depth", type=int, default=0, show_default=True, help="Also emit the bound-vs-depth curve up to this depth")
@click.pass_context
@workbench_command
def bounds(ctx: click.Context, **_):
    """Train (or load) a model and report every bound from its measured norms"""
    settings, model_values = resolve_settings(ctx)
    seed = settings["seed"]
    model = build_model_config(ctx, settings, model_values)
    if settings["max_depth"] < 0:
        raise click.BadParameter("must be non-negative", param_hint="--max-depth")
    graph = resolve_graph(settings, seed)

    out_dir = prepare_output("bounds", settings, seed, model)
    split = make_split(graph.labels, seed=seed)
    context = SpectralContext.from_graph(graph)

    record = {"dataset": graph.name, "seed": seed}
    if settings["checkpoint"]:
        params, model, _ = load_checkpoint(settings["checkpoint"])
        if model.in_dim != graph.num_features:
            raise ShapeMismatchError(f"checkpoint expects {model.in_dim} features, {graph.name} has {graph.num_features}")
    else:
        result = train(model, graph, split, seed=seed, context=context)
        params, model = result.params, result.config
        record.update(result.summary())

    V_P = context.basis_matrix(model.filter_basis, model.order)
    report = report_for_model(params, model, context, V_P, split.num_labelled)
    record.update({"basis": model.filter_basis.name, "K": model.order, "L": model.num_filter_layers})
    record.update(report.to_record())

    write_csv(out_dir / "bounds.csv", [record], list(record))
    payload = {"command": "bounds", "report": record}

    if settings["max_depth"]:
        inputs = model_bound_inputs(params, context, V_P, split.num_labelled)
        curve = depth_curve(inputs, range(1, settings["max_depth"] + 1), infinity_norm(context.adjacency))
        write_csv(out_dir / "depth.csv", curve, ["depth", "ftgc_nonlinear", "ftgc_linear", "jacobian_bound", "spatial_proxy"])
        payload["depth_curve"] = curve

    write_json(out_dir / "summary.json", payload, seed)

    table = Table(title=f"Bounds for {model.filter_basis.name} K={model.order} L={model.num_filter_layers} on {graph.name}")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="white")
    for key in ("gap", "ftgc_nonlinear", "ftgc_linear", "gap_bound", "jacobian_bound", "true_jacobian", "wrapper_prefactor"):
        if record.get(key) is not None:
            table.add_row(key, f"{record[key]:.6g}")
    console.print(table)

@cli.command(name="train")
@output_options
@graph_options
@model_options()
@click.option("--checkpoint", default="model.npz", show_default=True, help="Checkpoint file name inside --out")
@click.pass_context
@workbench_command
def train_command(ctx: click.Context, **_):
    """Train one model with early stopping and save a checkpoint"""
    settings, model_values = resolve_settings(ctx)
    seed = settings["seed"]
    model = build_model_config(ctx, settings, model_values)
    graph = resolve_graph(settings, seed)

    out_dir = prepare_output("train", settings, seed, model)
    split = make_split(graph.labels, seed=seed)
    result = train(model, graph, split, seed=seed)

    norms = result.measured_norms
    record = {
        "dataset": graph.name,
        "basis": result.config.filter_basis.name,
        "K": result.config.order,
        "L": result.config.num_filter_layers,
        "seed": seed,
        **result.summary(),
        "C_W": float(np.prod(norms.C_W)),
        "C_theta": float(np.prod(norms.C_theta)),
        "W_in_norm": norms.W_in,
        "W_out_norm": norms.W_out,
    }
    write_csv(out_dir / "train.csv", [record], list(record))
    save_checkpoint(out_dir / Path(settings["checkpoint"]).name, result.params, result.config, seed)
    write_json(out_dir / "summary.json", {"command": "train", "result": record}, seed)

    console.print(
        f"[bold green]✓[/bold green] {graph.name}: test_acc={result.test_acc:.3f} "
        f"gap={result.gap:.4f} best_epoch={result.best_epoch}"
    )

@cli.command()
@output_options
@graph_options
@model_options(default_layers=2, default_architecture="plain", default_activation="relu")
@click.option("--bases", default="all", show_default=True, help="'all' or a comma list of bases")
@click.option("--orders", default="1..10", show_default=True, help="Orders as 'a..b' or a comma list")
@click.option("--depths", default=None, help="Filter depths as 'a..b' or a comma list (default: --layers)")
@click.option("--seeds", "seed_count", type=int, default=10, show_default=True, help="Number of seeds / splits")
@click.option("--jobs", "-j", type=int, default=config.SWEEP_JOBS, show_default=True, help="Worker threads")
@click.option("--db", default=None, help="Also store rows in this SQLite file inside --out")
@click.pass_context
@workbench_command
def sweep(ctx: click.Context, **_):
    """Bound-vs-gap sweep over bases, orders, depths and seeds"""
    settings, model_values = resolve_settings(ctx)
    seed = settings["seed"]
    model = build_model_config(ctx, settings, model_values)
    bases = parse_bases(settings["bases"])
    orders = parse_orders(settings["orders"], "--orders")
    depths = parse_orders(settings["depths"], "--depths") if settings["depths"] else [model.num_filter_layers]
    seeds = seed_list(seed, settings["seed_count"])
    graph = resolve_graph(settings, seed)

    out_dir = prepare_output("sweep", settings, seed, model)
    with CsvStream(out_dir / "sweep.csv", SweepRow.columns()) as stream:
        rows = run_sweep(
            datasets=[(graph.name, graph)],
            bases=bases,
            orders=orders,
            depths=depths,
            seeds=seeds,
            train_config=model,
            jobs=max(1, settings["jobs"]),
            rescaled=settings["rescaled"],
            on_row=lambda row: stream.append(row.to_record())
        )

    if settings["db"]:
        storage = SweepStorage(database_url(out_dir / Path(settings["db"]).name))
        run_id = storage.create_run(graph.name, seed, {k: v for k, v in settings.items() if not k.startswith("_")})
        storage.save_rows_batch(run_id, [row.to_record() for row in rows])

    summary = sweep_summary(rows)
    write_json(out_dir / "summary.json", {"command": "sweep", **summary}, seed)
    print_sweep_summary(summary)

@cli.command()
@output_options
@graph_options
@model_options()
@click.option("--bases", default="all", show_default=True, help="'all' or a comma list of bases")
@click.option("--seeds", "seed_count", type=int, default=10, show_default=True, help="Number of splits")
@click.option("--lambdas", default=",".join(str(value) for value in [0.0] + config.LAMBDA_GRID), show_default=True, help="lambda_EW grid (must include 0)")
@click.option("--trials", type=int, default=0, show_default=True, help="Hyperparameter candidates (0: defaults only)")
@click.option("--jobs", "-j", type=int, default=config.SWEEP_JOBS, show_default=True, help="Worker threads")
@click.pass_context
@workbench_command
def ablate(ctx: click.Context, **_):
    """Base vs energy-regularized models, paired over splits"""
    settings, model_values = resolve_settings(ctx)
    seed = settings["seed"]
    model = build_model_config(ctx, settings, model_values)
    bases = parse_bases(settings["bases"])
    lambdas = parse_floats(settings["lambdas"], "--lambdas")
    if 0.0 not in lambdas:
        raise click.BadParameter("the grid must include 0", param_hint="--lambdas")
    seeds = seed_list(seed, settings["seed_count"])
    graph = resolve_graph(settings, seed)

    out_dir = prepare_output("ablate", settings, seed, model)
    result = regularizer_ablation(
        dataset=graph.name,
        graph=graph,
        bases=bases,
        seeds=seeds,
        lambda_grid=lambdas,
        train_config=model,
        trials=settings["trials"],
        search_seed=seed,
        jobs=max(1, settings["jobs"]),
        rescaled=settings["rescaled"]
    )

    write_csv(out_dir / "ablation.csv", [row.to_record() for row in result.rows], AblationRow.columns())
    write_csv(
        out_dir / "ablation_splits.csv",
        [vars(outcome) for outcome in result.splits],
        list(SplitOutcome.__dataclass_fields__)
    )
    write_json(out_dir / "summary.json", {"command": "ablate", "table": [row.to_record() for row in result.rows]}, seed)

    table = Table(title=f"Regularizer ablation on {graph.name}")
    table.add_column("Basis", style="cyan")
    table.add_column("Acc Base", style="white")
    table.add_column("Acc +Reg", style="white")
    table.add_column("Δ Acc", style="yellow")
    table.add_column("Gap Base", style="white")
    table.add_column("Gap +Reg", style="white")
    table.add_column("Δ Gap", style="yellow")
    for row in result.rows:
        if row.error:
            table.add_row(row.basis, "[red]failed[/red]", "", "", "", "", row.error)
            continue
        table.add_row(
            row.basis,
            f"{row.base_acc:.3f}±{row.base_acc_ci:.3f}",
            f"{row.reg_acc:.3f}±{row.reg_acc_ci:.3f}",
            f"{row.delta_acc:+.3f}{row.acc_stars}",
            f"{row.base_gap:.4f}±{row.base_gap_ci:.4f}",
            f"{row.reg_gap:.4f}±{row.reg_gap_ci:.4f}",
            f"{row.delta_gap:+.4f}{row.gap_stars}"
        )
    console.print(table)

@cli.command()
@output_options
@graph_options
@model_options(default_basis="monomial", default_layers=2, default_activation="relu")
@click.option("--orders", default="1..10", show_default=True, help="Orders as 'a..b' or a comma list")
@click.pass_context
@workbench_command
def jacobian(ctx: click.Context, **_):
    """True Jacobian norm vs its bound for trained relu stacks"""
    settings, model_values = resolve_settings(ctx)
    seed = settings["seed"]
    model = build_model_config(ctx, settings, model_values)
    orders = parse_orders(settings["orders"], "--orders")
    graph = resolve_graph(settings, seed)

    out_dir = prepare_output("jacobian", settings, seed, model)
    with CsvStream(out_dir / "jacobian.csv", TightnessRow.columns()) as stream:
        rows = jacobian_tightness(
            graph,
            model,
            basis=model.filter_basis,
            orders=orders,
            depth=model.num_filter_layers,
            seed=seed,
            on_row=lambda row: stream.append(row.to_record())
        )

    violations = sum(1 for row in rows if not row.error and row.true_jacobian > row.jacobian_bound)
    write_json(
        out_dir / "summary.json",
        {"command": "jacobian", "violations": violations, "rows": [row.to_record() for row in rows]},
        seed
    )

    table = Table(title=f"Jacobian tightness ({model.filter_basis.name}, L={model.num_filter_layers})")
    table.add_column("K", style="cyan")
    table.add_column("||J||", style="white")
    table.add_column("bound", style="white")
    table.add_column("ratio", style="yellow")
    for row in rows:
        table.add_row(str(row.K), f"{row.true_jacobian:.4g}", f"{row.jacobian_bound:.4g}", f"{row.ratio:.2f}")
    console.print(table)

@cli.command()
@output_options
@click.pass_context
def selftest(ctx: click.Context, **_):
    """Run the invariant suites; exit 0 only when every check passes"""
    settings, _ = resolve_settings(ctx)
    seed = settings["seed"]
    out_dir = prepare_output("selftest", settings, seed)

    results = run_selftest()
    write_csv(out_dir / "selftest.csv", [result.to_record() for result in results], CheckResult.columns())

    table = Table(title="Selftest")
    table.add_column("Check", style="cyan")
    table.add_column("Result", style="white")
    table.add_column("Detail", style="white")
    for result in results:
        status = "[bold green]✓[/bold green]" if result.passed else "[bold red]✗[/bold red]"
        table.add_row(result.name, status, result.detail)
    console.print(table)

    failed = [result.name for result in results if not result.passed]
    if failed:
        raise WorkbenchError(f"{len(failed)} selftest check(s) failed: {', '.join(failed)}")

def print_sweep_summary(summary: Dict[str, object]):
    table = Table(title=f"Sweep summary ({summary['rows']} rows, {summary['failed_rows']} failed)")
    table.add_column("gap vs", style="cyan")
    table.add_column("Pearson r", style="yellow")
    table.add_column("Spearman ρ", style="yellow")
    table.add_column("95% CI", style="white")
    for name, report in summary["correlations"].items():
        if report is None:
            table.add_row(name, "n/a", "n/a", "")
            continue
        table.add_row(
            name,
            f"{report['pearson_r']:.3f}",
            f"{report['spearman_rho']:.3f}",
            f"[{report['fisher_ci_low']:.3f}, {report['fisher_ci_high']:.3f}]"
        )
    console.print(table)

# Entry points

def run_command(argv: Sequence[str]) -> int:
    """Run one CLI invocation; 0 on success, 1 on usage errors, 2 on runtime errors"""
    try:
        result = cli.main(args=list(argv), prog_name="spectral-workbench", standalone_mode=False)
        return result if isinstance(result, int) else 0
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.exceptions.Abort:
        console.print("[bold red]✗[/bold red] Aborted")
        return 1
    except click.ClickException as e:
        console.print(f"[bold red]✗[/bold red] {e.format_message()}")
        logger.error(f"Usage error: {e.format_message()}")
        return 1
    except ConfigError as e:
        console.print(f"[bold red]✗[/bold red] Configuration error: {e}")
        logger.error(f"Configuration error: {e}")
        return 1
    except WorkbenchError as e:
        console.print(f"[bold red]✗[/bold red] {e}")
        logger.error(f"Command failed: {e}")
        return 2
    except Exception as e:
        console.print(f"[bold red]✗[/bold red] Unexpected error: {e}")
        logger.exception(f"Unexpected error: {e}")
        return 2
    finally:
        remove_file_sink()

def main(argv: Optional[Sequence[str]] = None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))

if __name__ == '__main__':
    main()
