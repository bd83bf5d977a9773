"""
Ordering Rules - 訂購政策

四種訂購規則：
- SafetyStock: 庫存低於再訂購點時下固定批量 (同一時間最多一張未到貨訂單)
- NewsvendorStatic: 每 T 天訂購固定量 Q* (Model 1 / Model 2)
- Model2Adjusted: 每 T 天訂購 Q* - q0 (扣除現有庫存)
- Model3: 每 T 天訂購 Q* - q̂0，q̂0 為到貨時的預估剩餘庫存

臨界分位數：
- Model 1: (p - c) / p，c = c_v
- Model 2: (p - c_v) / (p + h)
- Model 3: (p - c_v - h/2) / (p - c_v + h/2)
"""

from dataclasses import dataclass
from enum import Enum

from demand.periodic import PeriodicDemandModel, expected_periodic_demand, quantile
from errors import DomainError
from policy.economics import SkuEconomics


class PolicyKind(str, Enum):
    SAFETY_STOCK = "safety_stock"
    MODEL1 = "model1"
    MODEL2 = "model2"
    MODEL3 = "model3"
    MODEL2_ADJUSTED = "model2_adjusted"

    @property
    def label(self) -> str:
        return POLICY_LABELS[self]

    @property
    def is_newsvendor(self) -> bool:
        return self is not PolicyKind.SAFETY_STOCK


POLICY_LABELS = {
    PolicyKind.SAFETY_STOCK: "Safety stock",
    PolicyKind.MODEL1: "Model 1",
    PolicyKind.MODEL2: "Model 2",
    PolicyKind.MODEL3: "Model 3",
    PolicyKind.MODEL2_ADJUSTED: "Model 2 adjusted",
}

# 報表欄位順序
REPORT_ORDER = (
    PolicyKind.SAFETY_STOCK,
    PolicyKind.MODEL1,
    PolicyKind.MODEL2,
    PolicyKind.MODEL3,
    PolicyKind.MODEL2_ADJUSTED,
)
DEFAULT_POLICIES = REPORT_ORDER[:4]


@dataclass(frozen=True)
class SafetyStock:
    reorder_point: float
    order_size: float

    kind = PolicyKind.SAFETY_STOCK

    @property
    def base_quantity(self) -> float:
        return self.order_size


@dataclass(frozen=True)
class NewsvendorStatic:
    model: PolicyKind
    base_q: float

    def __post_init__(self):
        if self.model not in (PolicyKind.MODEL1, PolicyKind.MODEL2):
            raise DomainError(f"static newsvendor policy must be model1 or model2, got {self.model}")

    @property
    def kind(self) -> PolicyKind:
        return self.model

    @property
    def base_quantity(self) -> float:
        return self.base_q


@dataclass(frozen=True)
class Model2Adjusted:
    base_q: float

    kind = PolicyKind.MODEL2_ADJUSTED

    @property
    def base_quantity(self) -> float:
        return self.base_q


@dataclass(frozen=True)
class Model3:
    base_q: float
    expected_periodic_demand: float
    lead_days: int = 7
    period_days: int = 7

    kind = PolicyKind.MODEL3

    @property
    def base_quantity(self) -> float:
        return self.base_q


Policy = SafetyStock | NewsvendorStatic | Model2Adjusted | Model3


@dataclass(frozen=True)
class InventorySnapshot:
    """下單決策日已知的庫存 q0 (當日到貨已入庫)"""

    on_hand: float
    day_index: int | None = None

    def __post_init__(self):
        if self.on_hand < 0:
            where = f" on day {self.day_index}" if self.day_index is not None else ""
            raise DomainError(f"on-hand inventory cannot be negative{where}, got {self.on_hand}")


def critical_fractile(kind: PolicyKind, econ: SkuEconomics) -> float:
    """F^-1 的引數 (臨界分位數)"""
    p, c_v, h = econ.price, econ.variable_cost, econ.holding_cost
    if kind is PolicyKind.MODEL1:
        value = (p - c_v) / p
    elif kind in (PolicyKind.MODEL2, PolicyKind.MODEL2_ADJUSTED):
        value = (p - c_v) / (p + h)
    elif kind is PolicyKind.MODEL3:
        value = (p - c_v - h / 2) / (p - c_v + h / 2)
    else:
        raise DomainError(f"{kind.value} has no critical fractile")
    if not 0 < value < 1:
        raise DomainError(f"critical fractile {value} for {kind.value} falls outside (0, 1)")
    return value


def estimate_carryover(
    snapshot: InventorySnapshot,
    expected_periodic_demand: float,
    lead_days: int,
    period_days: int,
) -> float:
    """q̂0 = q0 - E[D] * T_l / T (可為負，負值會加大訂購量)"""
    if not 0 <= lead_days <= period_days:
        raise DomainError(f"lead time must satisfy 0 <= T_l <= T, got T_l={lead_days}, T={period_days}")
    return snapshot.on_hand - expected_periodic_demand * (lead_days / period_days)


def order_quantity(policy: Policy, snapshot: InventorySnapshot, outstanding: float = 0.0) -> float:
    """決策日的訂購量 (不為負)"""
    match policy:
        case SafetyStock(reorder_point=rop, order_size=size):
            if snapshot.on_hand < rop and outstanding == 0:
                return size
            return 0.0
        case NewsvendorStatic(base_q=base_q):
            return base_q
        case Model2Adjusted(base_q=base_q):
            return max(0.0, base_q - snapshot.on_hand)
        case Model3():
            q_hat = estimate_carryover(
                snapshot, policy.expected_periodic_demand, policy.lead_days, policy.period_days
            )
            return max(0.0, policy.base_q - q_hat)
    raise DomainError(f"unknown policy {policy!r}")


def build_policy(
    kind: PolicyKind,
    econ: SkuEconomics,
    model: PeriodicDemandModel | None = None,
    lead_days: int = 7,
    expected_demand: float | None = None,
) -> Policy:
    """由經濟參數與週期需求模型建立政策 (base_q = F^-1(臨界分位數))

    expected_demand 為 Model 3 估計期末殘量用的 E[D]；未指定時取 T × 日分布的解析平均。
    """
    if kind is PolicyKind.SAFETY_STOCK:
        return SafetyStock(reorder_point=econ.safety_buffer, order_size=econ.safety_buffer)
    if model is None:
        raise DomainError(f"{kind.value} needs a periodic demand model")

    base_q = quantile(model, critical_fractile(kind, econ))
    if kind in (PolicyKind.MODEL1, PolicyKind.MODEL2):
        return NewsvendorStatic(model=kind, base_q=base_q)
    if kind is PolicyKind.MODEL2_ADJUSTED:
        return Model2Adjusted(base_q=base_q)
    return Model3(
        base_q=base_q,
        expected_periodic_demand=(
            expected_periodic_demand(model) if expected_demand is None else float(expected_demand)
        ),
        lead_days=lead_days,
        period_days=model.period_days,
    )
