"""
Experiment Runner - 多次模擬與穩健性矩陣

- run_scenario: 一個 (model, true) 情境，所有政策共用每個 run 的需求路徑
- run_robustness_matrix: 3 x 3 (model, true) 組合
- run_holding_cost_sweep: 同一情境在不同持有成本 h 下重跑

run i 的需求由 SeedSequence([base_seed, i]) 產生，結果依 run 編號排序後彙總，
因此輸出與 worker 數量、排程順序無關。
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path

from config import MAX_WORKERS
from demand.distributions import DemandDistribution, DistributionKind
from demand.periodic import build_periodic_model
from errors import DomainError
from experiments.report import Metric, PolicyMetrics, ReportTable
from experiments.scenario import Scenario, SimulationSettings, SkuConfig
from helpers.stats import aggregate
from policy.economics import SkuEconomics
from policy.rules import DEFAULT_POLICIES, PolicyKind, build_policy
from simulation.engine import RunResult, SimConfig, draw_demand_path, run_simulation, write_trace_csv

logger = logging.getLogger(__name__)

# 每個 worker 分到的 chunk 數
CHUNKS_PER_WORKER = 4


def _run_chunk(
    run_indices: list[int],
    configs: dict[PolicyKind, SimConfig],
    true_dist: DemandDistribution,
    total_days: int,
    base_seed: int,
) -> list[tuple[int, dict[PolicyKind, RunResult]]]:
    """執行一段 run (module level，供 ProcessPoolExecutor pickle)"""
    out = []
    for run_index in run_indices:
        demand = draw_demand_path(true_dist, total_days, base_seed, run_index)
        out.append(
            (run_index, {kind: run_simulation(cfg, demand=demand) for kind, cfg in configs.items()})
        )
    return out


def _chunks(runs: int, n_chunks: int) -> list[list[int]]:
    n_chunks = max(1, min(runs, n_chunks))
    size, extra = divmod(runs, n_chunks)
    chunks, start = [], 0
    for i in range(n_chunks):
        stop = start + size + (1 if i < extra else 0)
        chunks.append(list(range(start, stop)))
        start = stop
    return chunks


def scenario_configs(s: Scenario) -> dict[PolicyKind, SimConfig]:
    """建立週期需求模型 (僅一次) 與各政策的模擬設定"""
    model = None
    if any(kind.is_newsvendor for kind in s.policies):
        model = build_periodic_model(
            s.model_dist, s.sim.period_days, n_samples=s.quantile_samples, seed=s.quantile_seed
        )
    expected_demand = s.sim.period_days * s.demand_mean if s.demand_mean is not None else None
    return {
        kind: s.sim.sim_config(
            s.econ, build_policy(kind, s.econ, model, s.sim.lead_days, expected_demand), s.true_dist
        )
        for kind in s.policies
    }


def simulate_runs(s: Scenario, *, max_workers: int | None = None) -> dict[PolicyKind, list[RunResult]]:
    """執行情境的所有 run，回傳各政策依 run 編號排序的結果"""
    configs = scenario_configs(s)
    total_days = s.sim.months * s.sim.days_per_month
    workers = MAX_WORKERS if max_workers is None else max_workers
    chunks = _chunks(s.runs, max(1, workers) * CHUNKS_PER_WORKER)

    collected: list[tuple[int, dict[PolicyKind, RunResult]]] = []
    if workers <= 1 or len(chunks) == 1:
        for chunk in chunks:
            collected.extend(_run_chunk(chunk, configs, s.true_dist, total_days, s.base_seed))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(_run_chunk, chunk, configs, s.true_dist, total_days, s.base_seed): chunk
                for chunk in chunks
            }
            for future in as_completed(futures):
                collected.extend(future.result())
                logger.debug("Chunk of %d runs done for %s", len(futures[future]), s.label)

    collected.sort(key=lambda item: item[0])
    return {kind: [results[kind] for _, results in collected] for kind in s.policies}


def summarize_runs(results: list[RunResult]) -> PolicyMetrics:
    return PolicyMetrics(
        profit=aggregate([r.monthly_profit for r in results], Metric.PROFIT.fractiles),
        avg_inventory=aggregate([r.avg_inventory for r in results], Metric.AVG_INVENTORY.fractiles),
        stockout_days=aggregate([r.stockout_days for r in results], Metric.STOCKOUT_DAYS.fractiles),
    )


def _slug(text: str) -> str:
    return "".join(ch if ch.isalnum() else "-" for ch in text.lower()).strip("-")


def write_scenario_traces(s: Scenario, trace_dir: Path, run_index: int = 0) -> list[Path]:
    """將第 run_index 次 run 的逐日追蹤寫成 trace_<情境>_<政策>.csv"""
    configs = scenario_configs(s)
    total_days = s.sim.months * s.sim.days_per_month
    demand = draw_demand_path(s.true_dist, total_days, s.base_seed, run_index)
    paths = []
    for kind, cfg in configs.items():
        rows: list[dict] = []
        run_simulation(cfg, demand=demand, trace=rows)
        name = f"trace_{_slug(s.label)}_{kind.value}.csv"
        paths.append(write_trace_csv(rows, Path(trace_dir) / name))
    return paths


def run_scenario(
    s: Scenario,
    *,
    max_workers: int | None = None,
    trace_dir: Path | None = None,
) -> dict[PolicyKind, PolicyMetrics]:
    """執行一個情境並彙總各政策的利潤、平均庫存與缺貨天數

    Args:
        s: 情境
        max_workers: process 數 (None 使用 config.MAX_WORKERS；<= 1 在本程序內執行)
        trace_dir: 若提供，寫出 run 0 的逐日追蹤 CSV

    Returns:
        {PolicyKind: PolicyMetrics}，依情境中的政策順序
    """
    started = time.perf_counter()
    logger.info("Running %s: %d runs, policies %s", s.label, s.runs, ", ".join(k.value for k in s.policies))
    per_policy = simulate_runs(s, max_workers=max_workers)
    if trace_dir is not None:
        write_scenario_traces(s, trace_dir)
    summary = {kind: summarize_runs(results) for kind, results in per_policy.items()}
    logger.info("Finished %s in %.1fs", s.label, time.perf_counter() - started)
    return summary


def run_robustness_matrix(
    econ: SkuEconomics,
    dists: dict[DistributionKind, DemandDistribution],
    policies=DEFAULT_POLICIES,
    runs: int = 900,
    base_seed: int = 0,
    *,
    sim: SimulationSettings | None = None,
    quantile_samples: int | None = None,
    quantile_seed: int | None = None,
    sku: str = "SKU",
    demand_mean: float | None = None,
    max_workers: int | None = None,
    trace_dir: Path | None = None,
) -> ReportTable:
    """全部 9 個 (model, true) 組合

    Raises:
        DomainError: 三種分布未齊全
    """
    missing = [k.value for k in DistributionKind if k not in dists]
    if missing:
        raise DomainError(f"robustness matrix needs all three distributions, missing {', '.join(missing)}")

    extra = {
        "sim": sim,
        "quantile_samples": quantile_samples,
        "quantile_seed": quantile_seed,
        "demand_mean": demand_mean,
    }
    extra = {k: v for k, v in extra.items() if v is not None}

    started = time.perf_counter()
    table = ReportTable()
    for model_kind in DistributionKind:
        for true_kind in DistributionKind:
            s = Scenario(
                name=sku,
                econ=econ,
                model_dist=dists[model_kind],
                true_dist=dists[true_kind],
                policies=tuple(policies),
                runs=runs,
                base_seed=base_seed,
                **extra,
            )
            table.add_results(s.label, run_scenario(s, max_workers=max_workers, trace_dir=trace_dir))
    logger.info("Robustness matrix for %s done in %.1fs", sku, time.perf_counter() - started)
    return table


def run_config_matrix(config: SkuConfig, *, runs=None, base_seed=None, max_workers=None, trace_dir=None) -> ReportTable:
    """以設定檔內容執行穩健性矩陣"""
    return run_robustness_matrix(
        config.economics,
        config.resolved_distributions(),
        config.policies,
        runs=config.runs if runs is None else runs,
        base_seed=config.base_seed if base_seed is None else base_seed,
        sim=config.simulation,
        quantile_samples=config.quantile_samples,
        quantile_seed=config.quantile_seed,
        sku=config.name,
        demand_mean=config.demand.mean if config.demand is not None else None,
        max_workers=max_workers,
        trace_dir=trace_dir,
    )


def run_holding_cost_sweep(
    config: SkuConfig,
    dist_kind: DistributionKind | str,
    holding_costs,
    *,
    runs: int | None = None,
    base_seed: int | None = None,
    max_workers: int | None = None,
) -> ReportTable:
    """以不同持有成本 h 重跑 model = true 的情境

    每個 h 的情境標籤為 "<name>: <分布> h=<h>"；違反 p - c_v - h/2 > 0 的 h 會拋出 ValidationError。
    """
    table = ReportTable()
    for h in holding_costs:
        econ = SkuEconomics.model_validate({**config.economics.model_dump(), "holding_cost": float(h)})
        s = config.scenario(dist_kind, econ=econ, runs=runs, base_seed=base_seed)
        label = f"{config.name}: {DistributionKind(dist_kind).label} h={float(h):g}"
        table.add_results(label, run_scenario(s, max_workers=max_workers))
    return table
