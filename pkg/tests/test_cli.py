import json
import pytest
from click.testing import CliRunner
from main import cli, resolve_graph, run_command
from src.models import database_url, dispose_engines
from src.storage import SweepStorage, read_csv, read_manifest

SMALL_SBM = "blocks=2,per_block=15,feature_dim=4"

def write_config(tmp_path, text: str, name: str = "run.cfg") -> str:
    path = tmp_path / name
    path.write_text(text)
    return str(path)

def test_profile_writes_table_summary_and_manifest(tmp_path):
    out = tmp_path / "profile"
    assert run_command(["profile", "--basis", "chebyshev", "--order", "10", "--out", str(out)]) == 0

    frame = read_csv(out / "profile.csv")
    assert len(frame) == 2001
    assert list(frame.columns) == ["basis", "K", "x", "amplification", "normalized"]
    assert frame["amplification"].max() == pytest.approx(11.0)

    summary = json.loads((out / "summary.json").read_text())
    assert summary["profiles"]["chebyshev"]["normalized_at_zero"] == pytest.approx(6 / 11)
    assert summary["seed"] == 0

    manifest = read_manifest(out / "manifest.txt")
    assert manifest["command"] == "profile"
    assert manifest["order"] == "10"
    assert "timestamp" in manifest

def test_profile_all_bases_rescaled(tmp_path):
    out = tmp_path / "profile"
    assert run_command(["profile", "--basis", "all", "--order", "4", "--rescaled", "--points", "101", "-o", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())["profiles"]
    assert set(summary) == {f"{name}-rescaled" for name in ("monomial", "chebyshev", "legendre", "bernstein")}
    assert all(entry["max"] == pytest.approx(1.0) for entry in summary.values())

def test_reruns_are_byte_identical(tmp_path):
    for name in ("first", "second"):
        assert run_command(["profile", "--basis", "legendre", "--order", "6", "--out", str(tmp_path / name)]) == 0
    for artefact in ("profile.csv", "summary.json"):
        assert (tmp_path / "first" / artefact).read_bytes() == (tmp_path / "second" / artefact).read_bytes()

@pytest.mark.parametrize("argv", [
    ["profile", "--colour", "red"],
    ["profile", "--basis", "hermite"],
    ["profile", "--order", "-1"],
    ["nonsense"],
    [],
])
def test_usage_errors_exit_with_one(tmp_path, argv):
    assert run_command(argv + (["--out", str(tmp_path)] if argv[:1] == ["profile"] else [])) == 1

def test_graph_and_sbm_are_mutually_exclusive(tmp_path, write_bundle):
    root = write_bundle("0 1\n1 2\n", "0,1\n2,3\n4,5\n", "0\n1\n0\n")
    assert run_command(["train", "--graph", str(root), "--sbm", "default", "--out", str(tmp_path / "out")]) == 1

def test_unknown_config_key_exits_with_one(tmp_path):
    config_file = write_config(tmp_path, "colour=red\n")
    assert run_command(["profile", "--config", config_file, "--out", str(tmp_path / "out")]) == 1

def test_invalid_model_value_exits_with_one(tmp_path):
    config_file = write_config(tmp_path, "dropout1=1.5\n")
    assert run_command(["train", "--sbm", SMALL_SBM, "--config", config_file, "--out", str(tmp_path / "out")]) == 1

def test_self_loops_need_the_flag(tmp_path, write_bundle):
    root = write_bundle("0 1\n1 1\n", "0,1\n2,3\n", "0\n1\n")
    assert run_command(["train", "--graph", str(root), "--out", str(tmp_path / "out")]) == 2
    graph = resolve_graph({"graph": str(root), "allow_self_loops": True}, seed=0)
    assert graph.n == 2 and len(graph.edges) == 2
    assert "--allow-self-loops" in CliRunner().invoke(cli, ["train", "--help"]).output

def test_malformed_bundle_exits_with_two(tmp_path, write_bundle):
    root = write_bundle("0 1\n5 1\n", "0,1\n2,3\n4,5\n", "0\n1\n0\n")
    assert run_command(["train", "--graph", str(root), "--out", str(tmp_path / "out")]) == 2

def test_config_file_values_yield_to_flags(tmp_path):
    config_file = write_config(tmp_path, "# profile settings\norder=3\nbasis=legendre\npoints=11\n")

    from_file = tmp_path / "from_file"
    assert run_command(["profile", "--config", config_file, "--out", str(from_file)]) == 0
    frame = read_csv(from_file / "profile.csv")
    assert set(frame["K"]) == {3} and set(frame["basis"]) == {"legendre"}
    assert len(frame) == 11

    overridden = tmp_path / "overridden"
    assert run_command(["profile", "--config", config_file, "--order", "5", "--out", str(overridden)]) == 0
    frame = read_csv(overridden / "profile.csv")
    assert set(frame["K"]) == {5} and set(frame["basis"]) == {"legendre"}

def test_train_then_bounds_from_checkpoint(tmp_path):
    config_file = write_config(tmp_path, "max_epochs=10\npatience=10\nhidden_dim=4\n")
    trained = tmp_path / "train"
    argv = ["train", "--sbm", SMALL_SBM, "--order", "3", "--config", config_file, "--out", str(trained)]
    assert run_command(argv) == 0
    assert (trained / "model.npz").exists()

    record = read_csv(trained / "train.csv").iloc[0]
    assert record["K"] == 3 and record["basis"] == "chebyshev"
    assert record["gap"] == pytest.approx(record["test_loss"] - record["train_loss"])
    manifest = read_manifest(trained / "manifest.txt")
    assert manifest["model.max_epochs"] == "10"
    assert manifest["model.order"] == "3"

    bounded = tmp_path / "bounds"
    argv = ["bounds", "--sbm", SMALL_SBM, "--checkpoint", str(trained / "model.npz"), "--max-depth", "3", "--out", str(bounded)]
    assert run_command(argv) == 0
    bounds = read_csv(bounded / "bounds.csv").iloc[0]
    assert bounds["true_jacobian"] <= bounds["jacobian_bound"]
    assert len(read_csv(bounded / "depth.csv")) == 3

def test_bounds_rejects_checkpoint_for_other_features(tmp_path):
    config_file = write_config(tmp_path, "max_epochs=5\npatience=5\nhidden_dim=4\n")
    trained = tmp_path / "train"
    assert run_command(["train", "--sbm", SMALL_SBM, "--order", "2", "--config", config_file, "--out", str(trained)]) == 0
    argv = ["bounds", "--sbm", "blocks=2,per_block=15,feature_dim=6", "--checkpoint", str(trained / "model.npz"), "--out", str(tmp_path / "b")]
    assert run_command(argv) == 2

def test_small_sweep_with_database(tmp_path):
    config_file = write_config(tmp_path, "max_epochs=10\npatience=10\nhidden_dim=4\nseeds=2\n")
    out = tmp_path / "sweep"
    argv = [
        "sweep", "--sbm", SMALL_SBM, "--bases", "chebyshev,monomial", "--orders", "1..2",
        "--config", config_file, "--db", "sweep.db", "--out", str(out),
    ]
    assert run_command(argv) == 0

    frame = read_csv(out / "sweep.csv")
    assert len(frame) == 2 * 2 * 2
    assert sorted(set(frame["seed"])) == [0, 1]
    assert set(frame["L"]) == {2}
    assert frame["W_in_norm"].isna().all()
    summary = json.loads((out / "summary.json").read_text())
    assert summary["rows"] == 8
    assert summary["checks"]["jacobian_violations"] == 0

    storage = SweepStorage(database_url(out / "sweep.db"))
    assert len(storage.load_rows()) == 8
    dispose_engines()

def test_small_ablation(tmp_path):
    config_file = write_config(tmp_path, "max_epochs=10\npatience=10\nhidden_dim=4\n")
    out = tmp_path / "ablate"
    argv = [
        "ablate", "--sbm", SMALL_SBM, "--bases", "chebyshev", "--seeds", "2",
        "--lambdas", "0,0.5", "--order", "3", "--config", config_file, "--out", str(out),
    ]
    assert run_command(argv) == 0
    assert len(read_csv(out / "ablation.csv")) == 1
    assert len(read_csv(out / "ablation_splits.csv")) == 4

def test_ablation_grid_must_contain_zero(tmp_path):
    argv = ["ablate", "--sbm", SMALL_SBM, "--lambdas", "0.1,1", "--out", str(tmp_path / "out")]
    assert run_command(argv) == 1

def test_jacobian_command(tmp_path):
    config_file = write_config(tmp_path, "max_epochs=10\npatience=10\nhidden_dim=4\n")
    out = tmp_path / "jacobian"
    assert run_command(["jacobian", "--sbm", SMALL_SBM, "--orders", "1,2", "--config", config_file, "--out", str(out)]) == 0
    frame = read_csv(out / "jacobian.csv")
    assert list(frame["K"]) == [1, 2]
    assert set(frame["basis"]) == {"monomial"}
    assert json.loads((out / "summary.json").read_text())["violations"] == 0

def test_cli_runner_help():
    result = CliRunner().invoke(cli, ["sweep", "--help"])
    assert result.exit_code == 0
    assert "--orders" in result.output
    assert "--db" in result.output

@pytest.mark.slow
def test_selftest_command_passes(tmp_path):
    assert run_command(["selftest", "--out", str(tmp_path / "selftest")]) == 0
    assert len(read_csv(tmp_path / "selftest" / "selftest.csv")) == 13
