"""Policy module - 經濟參數、訂購規則與期望利潤"""

from .economics import SkuEconomics
from .profit import expected_profit, grid_search_optimum
from .rules import (
    DEFAULT_POLICIES,
    REPORT_ORDER,
    InventorySnapshot,
    Model2Adjusted,
    Model3,
    NewsvendorStatic,
    Policy,
    PolicyKind,
    SafetyStock,
    build_policy,
    critical_fractile,
    estimate_carryover,
    order_quantity,
)
from .tables import base_order_table
from .tools import register_policy_tools

__all__ = [
    "SkuEconomics",
    "expected_profit",
    "grid_search_optimum",
    "DEFAULT_POLICIES",
    "REPORT_ORDER",
    "InventorySnapshot",
    "Model2Adjusted",
    "Model3",
    "NewsvendorStatic",
    "Policy",
    "PolicyKind",
    "SafetyStock",
    "build_policy",
    "critical_fractile",
    "estimate_carryover",
    "order_quantity",
    "base_order_table",
    "register_policy_tools",
]
