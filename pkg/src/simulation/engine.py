"""
Simulation Engine - 逐日庫存模擬

每個工作天依序執行：
1. 到期訂單入庫
2. 下單決策 (安全庫存每日檢查；newsvendor 每 T 天下單，T_l 天後到貨)
3. 由 "true" 分布產生當日需求
4. 銷售 min(需求, 庫存)，毛利 (p - c_v) 計入利潤
5. 未滿足需求時缺貨天數 +1
6. 依當日期末庫存扣除持有成本 h / days_per_month
7. 月底扣除月固定成本

初始庫存等於政策的基準量；視為 T_l 天前下單、於第 1 天前到貨，
因此第一次 newsvendor 決策日為 T - T_l + 1。
"""

import csv
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from demand.distributions import DemandDistribution, sample
from demand.periodic import PeriodicDemandModel
from errors import ConfigError
from policy.economics import SkuEconomics
from policy.rules import InventorySnapshot, Policy, SafetyStock, order_quantity
from simulation.state import SimState

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ("day", "arrivals", "order_placed", "demand", "sold", "end_inventory", "profit_delta")


@dataclass(frozen=True)
class SimConfig:
    econ: SkuEconomics
    policy: Policy
    true_dist: DemandDistribution
    months: int = 120
    days_per_month: int = 23
    period_days: int = 7
    lead_days: int = 7
    first_order_day: int | None = None

    def __post_init__(self):
        if self.months < 1:
            raise ConfigError(f"months must be >= 1, got {self.months}")
        if self.days_per_month < 1:
            raise ConfigError(f"days_per_month must be >= 1, got {self.days_per_month}")
        if not 1 <= self.lead_days <= self.period_days <= self.days_per_month:
            raise ConfigError(
                "require 1 <= lead_days <= period_days <= days_per_month, got "
                f"T_l={self.lead_days}, T={self.period_days}, days_per_month={self.days_per_month}"
            )
        if self.first_order_day is not None and self.first_order_day < 1:
            raise ConfigError(f"first_order_day must be >= 1, got {self.first_order_day}")

    @property
    def total_days(self) -> int:
        return self.months * self.days_per_month

    @property
    def first_decision_day(self) -> int:
        if self.first_order_day is not None:
            return self.first_order_day
        return self.period_days - self.lead_days + 1


@dataclass(frozen=True)
class RunResult:
    monthly_profit: float
    avg_inventory: float
    stockout_days: int
    total_profit: float
    units_sold: float
    lost_units: float
    orders_placed: int


def demand_stream(base_seed: int, run_index: int) -> np.random.Generator:
    """第 run_index 次 run 的需求亂數流，與排程無關"""
    return np.random.default_rng(np.random.SeedSequence([base_seed, run_index]))


def draw_demand_path(dist: DemandDistribution, total_days: int, base_seed: int, run_index: int) -> np.ndarray:
    return np.asarray(sample(dist, demand_stream(base_seed, run_index), total_days), dtype=float)


def run_simulation(
    cfg: SimConfig,
    quantile_model: PeriodicDemandModel | None = None,
    seed: int = 0,
    *,
    run_index: int = 0,
    demand: np.ndarray | None = None,
    trace: list[dict] | None = None,
) -> RunResult:
    """執行一次完整模擬

    Args:
        cfg: 模擬設定 (政策已預先計算)
        quantile_model: 政策所用的週期需求模型 (用於檢查週期長度一致)
        seed: 需求亂數的 base seed
        run_index: run 編號，與 seed 一起決定需求路徑
        demand: 預先產生的需求路徑 (同一 run 的各政策共用)
        trace: 若提供，逐日附加 TRACE_COLUMNS 欄位的 dict

    Returns:
        RunResult (月平均利潤、平均庫存、缺貨天數)
    """
    if quantile_model is not None and quantile_model.period_days != cfg.period_days:
        raise ConfigError(
            f"quantile model period {quantile_model.period_days} != simulation period {cfg.period_days}"
        )
    if demand is None:
        demand = draw_demand_path(cfg.true_dist, cfg.total_days, seed, run_index)
    elif len(demand) != cfg.total_days:
        raise ConfigError(f"demand path has {len(demand)} days, expected {cfg.total_days}")

    econ = cfg.econ
    policy = cfg.policy
    periodic = not isinstance(policy, SafetyStock)
    margin = econ.margin
    holding_rate = econ.holding_cost / cfg.days_per_month
    fixed = econ.fixed_cost_monthly
    days_per_month = cfg.days_per_month
    period_days = cfg.period_days
    lead_days = cfg.lead_days

    state = SimState(
        on_hand=policy.base_quantity,
        last_order_day=cfg.first_decision_day - period_days,
    )

    for day, need in enumerate(demand.tolist(), start=1):
        state.day = day
        arrivals = state.receive(day)

        ordered = 0.0
        if periodic:
            if day - state.last_order_day == period_days:
                ordered = order_quantity(policy, InventorySnapshot(state.on_hand, day))
                state.place_order(ordered, day + lead_days)
        elif state.on_hand < policy.reorder_point and not state.pending:
            ordered = order_quantity(policy, InventorySnapshot(state.on_hand, day), state.outstanding)
            state.place_order(ordered, day + lead_days)

        sold = state.sell(need)
        delta = margin * sold - state.on_hand * holding_rate
        state.inventory_day_sum += state.on_hand
        if day % days_per_month == 0:
            delta -= fixed
        state.profit += delta

        if trace is not None:
            trace.append(
                {
                    "day": day,
                    "arrivals": arrivals,
                    "order_placed": ordered,
                    "demand": need,
                    "sold": sold,
                    "end_inventory": state.on_hand,
                    "profit_delta": delta,
                }
            )

    return RunResult(
        monthly_profit=state.profit / cfg.months,
        avg_inventory=state.inventory_day_sum / cfg.total_days,
        stockout_days=state.stockout_days,
        total_profit=state.profit,
        units_sold=state.units_sold,
        lost_units=state.lost_units,
        orders_placed=state.orders_placed,
    )


def write_trace_csv(rows: list[dict], path: Path) -> Path:
    """將逐日追蹤寫成 CSV"""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=TRACE_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    logger.debug("Wrote %d trace rows to %s", len(rows), path)
    return path
