"""
Experiment Tools - 模擬與穩健性矩陣工具

提供給 MCP Server 註冊的實驗工具函數；執行較久的模擬放到 worker thread
"""

import asyncio

from mcp.server.fastmcp import FastMCP

from config import PRESETS
from errors import BatchSizeError
from experiments.report import ReportTable, render_report
from experiments.runner import run_config_matrix, run_scenario
from experiments.scenario import load_config
from helpers import error_response, with_units
from policy.rules import PolicyKind
from policy.tables import base_order_table

# 工具預設的 run 數 (完整 900 runs 請用 CLI)
TOOL_DEFAULT_RUNS = 100


def register_experiment_tools(mcp: FastMCP):
    """向 MCP Server 註冊實驗工具

    Args:
        mcp: FastMCP 實例
    """

    @mcp.tool()
    async def list_presets() -> str:
        """List the shipped SKU presets with their economics and daily demand distributions."""
        presets = {}
        for name in PRESETS:
            try:
                config = load_config(name)
            except BatchSizeError as exc:
                presets[name] = {"error": str(exc)}
                continue
            presets[name] = {
                "economics": config.economics.model_dump(),
                "distributions": {k.value: d.model_dump() for k, d in config.resolved_distributions().items()},
                "runs": config.runs,
            }
        return with_units(presets)

    @mcp.tool()
    async def base_orders(preset: str) -> str:
        """Base order quantities per daily distribution and policy for a preset or config file.

        Args:
            preset: Preset name (sku_a, sku_b) or path to a YAML config
        """
        try:
            config = load_config(preset)
            table = await asyncio.to_thread(base_order_table, config)
        except (BatchSizeError, ValueError) as exc:
            return error_response(exc)
        return with_units({
            dist.value: {kind.value: qty for kind, qty in row.items()} for dist, row in table.items()
        })

    @mcp.tool()
    async def simulate_scenario(
        preset: str,
        model_dist: str = "uniform",
        true_dist: str = None,
        runs: int = TOOL_DEFAULT_RUNS,
        seed: int = None,
        policies: list[str] = None,
    ) -> str:
        """Simulate one (model, true) demand scenario and summarise each policy.

        Policies size orders with model_dist; daily demand is drawn from true_dist.
        All policies within a run face the same demand path.

        Args:
            preset: Preset name (sku_a, sku_b) or path to a YAML config
            model_dist: uniform | triangular | lognormal
            true_dist: Distribution of simulated demand (defaults to model_dist)
            runs: Number of independent runs
            seed: Base seed of the demand streams (defaults to the config's)
            policies: Subset of safety_stock, model1, model2, model3, model2_adjusted
        """
        try:
            config = load_config(preset)
            overrides = {"runs": runs, "base_seed": seed}
            if policies:
                overrides["policies"] = tuple(PolicyKind(p) for p in policies)
            s = config.scenario(model_dist, true_dist, **overrides)
            results = await asyncio.to_thread(run_scenario, s, max_workers=1)
        except (BatchSizeError, ValueError) as exc:
            return error_response(exc)

        table = ReportTable()
        table.add_results(s.label, results)
        return with_units({"scenario": s.label, "runs": s.runs, **table.to_dict()})

    @mcp.tool()
    async def robustness_matrix(preset: str, runs: int = TOOL_DEFAULT_RUNS, seed: int = None) -> str:
        """Run all nine model/true distribution pairs and return the report as CSV.

        Args:
            preset: Preset name (sku_a, sku_b) or path to a YAML config
            runs: Runs per scenario
            seed: Base seed of the demand streams (defaults to the config's)
        """
        try:
            config = load_config(preset)
            table = await asyncio.to_thread(run_config_matrix, config, runs=runs, base_seed=seed, max_workers=1)
        except (BatchSizeError, ValueError) as exc:
            return error_response(exc)
        return with_units({"runs": runs, "report_csv": render_report(table, "csv")})
