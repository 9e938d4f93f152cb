from main import EXIT_CONFIG_ERROR, EXIT_RESOURCE_ERROR, main, parse_values

from click.testing import CliRunner
from json import dumps
from pathlib import Path
import pytest

SMALL = ["--m", "16", "--r", "2", "--d", "3", "--c", "1", "--t", "2", "--trials", "4"]
STEM = "intersect_q2_m16_n6_k1_r2_d3_c1_t2"


@pytest.fixture
def workspace(tmp_path) -> Path:
    return tmp_path / "workspace"


def invoke(workspace: Path, *args: str):
    return CliRunner().invoke(main, ["--workspace", str(workspace), *args])


def test_parse_values():
    assert parse_values("40,41") == [40, 41]
    assert parse_values("40, 41,") == [40, 41]


def test_experiment_writes_summary(workspace):
    result = invoke(workspace, *SMALL, "--no-term")
    assert result.exit_code == 0
    assert (workspace / "results" / f"{STEM}_summary.json").exists()
    assert (workspace / "log" / "log_procParent.txt").exists()


def test_terminal_output(workspace):
    result = invoke(workspace, *SMALL, "--output", "csv", "--verbose")
    assert result.exit_code == 0
    assert "q,m,n,k,r,d,c,t,algorithm,trials" in result.output
    assert (workspace / "results" / f"{STEM}_summary.csv").exists()
    assert (workspace / "results" / f"{STEM}_trials.csv").exists()


def test_config_file(workspace, tmp_path):
    path = tmp_path / "config.json"
    path.write_text(
        dumps({"Code": {"m": 16, "r": 2, "d": 3, "c": 1}, "Decoder": {"t": 2}, "Run": {"trials": 2}})
    )
    result = invoke(workspace, "--config", str(path), "--no-term")
    assert result.exit_code == 0
    assert (workspace / "results" / f"{STEM}_summary.json").exists()


@pytest.mark.parametrize(
    "args",
    [
        ["--q", "4"],
        ["--n", "30", "--c", "1", "--m", "41"],
        ["--sweep", "m"],
        ["--sweep", "m", "--values", "a,b"],
        ["--parallelism", "0"],
        ["--t", "40", "--m", "41"],
    ],
)
def test_config_errors(workspace, args):
    result = invoke(workspace, *args, "--no-term")
    assert result.exit_code == EXIT_CONFIG_ERROR


def test_unknown_algorithm_rejected_by_click(workspace):
    assert invoke(workspace, "--algorithm", "gabidulin").exit_code == 2


def test_resource_limit(workspace):
    result = invoke(workspace, *SMALL, "--algorithm", "multiset", "--candidate-cap", "1", "--no-term")
    assert result.exit_code == EXIT_RESOURCE_ERROR


def test_sweep_table(workspace):
    result = invoke(workspace, *SMALL, "--sweep", "m", "--values", "16,18", "--no-term")
    assert result.exit_code == 0
    assert (workspace / "results" / f"sweep_m_{STEM}_summary.csv").exists()
    assert (workspace / "results" / "intersect_q2_m18_n6_k1_r2_d3_c1_t2_summary.json").exists()
