"""Experiments module - 情境、執行、報表與結果資料夾"""

from .output import RunFolder, load_summary
from .reference import CellCheck, compare_with_reference, load_reference, parse_scenario_label
from .report import FORMATS, Metric, PolicyMetrics, ReportTable, render_report
from .runner import (
    run_config_matrix,
    run_holding_cost_sweep,
    run_robustness_matrix,
    run_scenario,
    simulate_runs,
    summarize_runs,
    write_scenario_traces,
)
from .scenario import Scenario, SimulationSettings, SkuConfig, dump_config, load_config
from .tools import register_experiment_tools

__all__ = [
    "RunFolder",
    "load_summary",
    "CellCheck",
    "compare_with_reference",
    "load_reference",
    "parse_scenario_label",
    "FORMATS",
    "Metric",
    "PolicyMetrics",
    "ReportTable",
    "render_report",
    "run_config_matrix",
    "run_holding_cost_sweep",
    "run_robustness_matrix",
    "run_scenario",
    "simulate_runs",
    "summarize_runs",
    "write_scenario_traces",
    "Scenario",
    "SimulationSettings",
    "SkuConfig",
    "dump_config",
    "load_config",
    "register_experiment_tools",
]
