"""
Policy Tools - 臨界分位數與訂購量工具

提供給 MCP Server 註冊的政策工具函數
"""

import asyncio

from mcp.server.fastmcp import FastMCP

from config import QUANTILE_SAMPLES, QUANTILE_SEED
from demand.distributions import parse_distribution
from demand.periodic import build_periodic_model
from errors import BatchSizeError, DomainError
from helpers import error_response, with_units
from policy.economics import SkuEconomics
from policy.rules import InventorySnapshot, PolicyKind, build_policy, critical_fractile, order_quantity


def register_policy_tools(mcp: FastMCP):
    """向 MCP Server 註冊政策工具

    Args:
        mcp: FastMCP 實例
    """

    @mcp.tool()
    async def critical_fractiles(price: float, variable_cost: float, holding_cost: float = 0.0) -> str:
        """Critical fractiles (the F^-1 arguments) of the three newsvendor models.

        Model 1: (p - c_v) / p. Model 2: (p - c_v) / (p + h). Model 3: (p - c_v - h/2) / (p - c_v + h/2).

        Args:
            price: Unit selling price p
            variable_cost: Unit variable cost c_v
            holding_cost: Holding cost h per unit per month
        """
        try:
            econ = SkuEconomics(price=price, variable_cost=variable_cost, holding_cost=holding_cost)
        except (BatchSizeError, ValueError) as exc:
            return error_response(exc, hint="require p > c_v >= 0 and p - c_v - h/2 > 0")
        result = {}
        for kind in (PolicyKind.MODEL1, PolicyKind.MODEL2, PolicyKind.MODEL3):
            try:
                result[kind.value] = critical_fractile(kind, econ)
            except DomainError:
                # h = 0 時 Model 3 退化為 1
                result[kind.value] = None
        return with_units(result)

    @mcp.tool()
    async def order_size(
        policy: str,
        distribution: dict,
        on_hand: float,
        price: float,
        variable_cost: float,
        holding_cost: float = 0.0,
        safety_buffer: float = 0.0,
        outstanding: float = 0.0,
        period_days: int = 7,
        lead_days: int = 7,
        daily_mean: float = None,
        n_samples: int = QUANTILE_SAMPLES,
        seed: int = QUANTILE_SEED,
    ) -> str:
        """Order quantity a policy places on a decision day.

        Args:
            policy: safety_stock | model1 | model2 | model3 | model2_adjusted
            distribution: Daily demand used to size orders, e.g. {"kind": "uniform", "a": 235, "b": 810}
            on_hand: Inventory on hand q0 after today's arrivals
            price: Unit selling price p
            variable_cost: Unit variable cost c_v
            holding_cost: Holding cost h per unit per month
            safety_buffer: Reorder point and batch size of the safety-stock policy
            outstanding: Units already on order (safety stock orders only when this is 0)
            period_days: Ordering period T in working days
            lead_days: Lead time T_l in working days
            daily_mean: Observed mean daily demand; model3 estimates carry-over with period_days * daily_mean (default: mean of distribution)
            n_samples: Monte Carlo samples of the periodic demand
            seed: Seed of the sampling stream
        """
        try:
            kind = PolicyKind(policy)
            econ = SkuEconomics(
                price=price,
                variable_cost=variable_cost,
                holding_cost=holding_cost,
                safety_buffer=safety_buffer,
            )
            model = None
            if kind.is_newsvendor:
                model = await asyncio.to_thread(
                    build_periodic_model, parse_distribution(distribution), period_days,
                    n_samples=n_samples, seed=seed,
                )
            expected_demand = period_days * daily_mean if daily_mean is not None else None
            rule = build_policy(kind, econ, model, lead_days, expected_demand)
            qty = order_quantity(rule, InventorySnapshot(on_hand), outstanding)
        except (BatchSizeError, ValueError) as exc:
            return error_response(exc)

        return with_units({
            "policy": kind.value,
            "base_quantity": rule.base_quantity,
            "on_hand": on_hand,
            "order_quantity": qty,
        })
