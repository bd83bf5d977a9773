"""Command-line entry point: output, exit codes and run folders."""

import pytest

from cli import main


def test_fractile_from_preset(capsys):
    assert main(["fractile", "--config", "sku_a"]) == 0
    out = capsys.readouterr().out
    assert "0.400000000" in out
    assert "0.389105058" in out
    assert "0.932367150" in out


def test_fractile_without_holding_cost(capsys):
    assert main(["fractile", "--price", "100", "--variable-cost", "60"]) == 0
    out = capsys.readouterr().out
    assert "Model 3  n/a" in out


def test_fit_from_arguments(capsys):
    assert main(["fit", "--min", "0", "--max", "85", "--mean", "29", "--stdev", "31.28898"]) == 0
    out = capsys.readouterr().out
    assert "Triangular" in out
    assert "c=2\n" in out
    assert "sigma_l=0.87863" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["fit", "--min", "0", "--max", "85"],
        ["fractile", "--price", "50", "--variable-cost", "60"],
        ["quantile", "--config", "sku_b", "--fractile", "0.4", "--policy", "model1"],
        ["simulate", "--config", "does_not_exist.yaml"],
    ],
)
def test_user_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    assert "❌ error:" in capsys.readouterr().err


def test_report_missing_folder(tmp_path, capsys):
    assert main(["report", str(tmp_path / "nothing")]) == 2
    assert "summary.json" in capsys.readouterr().err


def test_quantile_table(small_config_file, capsys):
    assert main(["quantile", "--config", str(small_config_file), "--table", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "distribution,Safety stock,Model 1,Model 2,Model 3"
    assert [line.split(",")[0] for line in lines[1:]] == ["Uniform", "Triangular", "Log-normal"]


def test_quantile_with_normal_comparison(small_config_file, capsys):
    argv = ["quantile", "--config", str(small_config_file), "--policy", "model3", "--compare-normal"]
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert "F^-1(0.932367" in out
    assert "normal approximation" in out


def test_simulate_then_report(tmp_path, small_config_file, capsys):
    argv = [
        "simulate", "--config", str(small_config_file), "--model-dist", "triangular",
        "--runs", "2", "--workers", "1", "--out", str(tmp_path), "--format", "csv", "--trace",
    ]
    assert main(argv) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "scenario,metric,Safety stock,Model 1,Model 2,Model 3"

    folders = list(tmp_path.glob("simulate_sku_b_*"))
    assert len(folders) == 1
    folder = folders[0]
    for name in ("summary.json", "report.csv", "report.md", "details.md", "config.yaml"):
        assert (folder / name).exists()
    assert len(list(folder.glob("trace_*.csv"))) == 4

    assert main(["report", str(folder), "--format", "csv", "--metrics", "profit"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[1].startswith("sku_b: Triangular/Triangular,profit,")


def test_no_save_creates_nothing(tmp_path, small_config_file, capsys):
    argv = [
        "sweep", "--config", str(small_config_file), "--holding-costs", "1", "5",
        "--runs", "2", "--workers", "1", "--out", str(tmp_path), "--no-save",
    ]
    assert main(argv) == 0
    assert "h=5" in capsys.readouterr().out
    assert list(tmp_path.iterdir()) == []


def test_repeated_invocations_share_logging(capsys):
    for _ in range(3):
        assert main(["fractile", "--config", "sku_b", "--log-level", "INFO"]) == 0
        assert "Model 1" in capsys.readouterr().out
