"""
Expected Profit - 期望利潤 (最適性驗證用)

以週期需求的經驗樣本計算各模型的目標函數：
- Model 1: p E[min{D,Q}] - c Q
- Model 2: p E[min{D,Q}] - c_f - c_v (Q - q0) - h E[max{Q-D,0}]
- Model 3: (p - c_v) E[min{D,Q}] - c_f - h (Q + E[max{Q-D,0}]) / 2

c_f 為每週期固定成本 = 月固定成本 x T / 每月工作天數。
"""

import numpy as np

from demand.periodic import PeriodicDemandModel, expected_sales
from errors import DomainError
from policy.economics import SkuEconomics
from policy.rules import PolicyKind


def expected_profit(
    kind: PolicyKind,
    q,
    econ: SkuEconomics,
    model: PeriodicDemandModel,
    q0: float = 0.0,
    days_per_month: int = 23,
):
    """單一週期的期望利潤，對 q 向量化"""
    q_arr = np.asarray(q, dtype=float)
    if np.any(q_arr < 0):
        raise DomainError("order-up-to quantity Q must be nonnegative")

    p, c_v, h = econ.price, econ.variable_cost, econ.holding_cost
    fixed = econ.fixed_cost_monthly * model.period_days / days_per_month
    sold = expected_sales(model, q_arr)
    leftover = q_arr - sold

    if kind is PolicyKind.MODEL1:
        value = p * sold - c_v * q_arr
    elif kind in (PolicyKind.MODEL2, PolicyKind.MODEL2_ADJUSTED):
        value = p * sold - fixed - c_v * (q_arr - q0) - h * leftover
    elif kind is PolicyKind.MODEL3:
        value = (p - c_v) * sold - fixed - h * (q_arr + leftover) / 2
    else:
        raise DomainError(f"{kind.value} has no newsvendor objective")
    return float(value) if np.ndim(value) == 0 else value


def grid_search_optimum(
    kind: PolicyKind,
    econ: SkuEconomics,
    model: PeriodicDemandModel,
    grid,
    q0: float = 0.0,
    days_per_month: int = 23,
) -> float:
    """在網格上取期望利潤最大的 Q"""
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise DomainError("grid must not be empty")
    values = expected_profit(kind, grid, econ, model, q0=q0, days_per_month=days_per_month)
    return float(grid[int(np.argmax(values))])
