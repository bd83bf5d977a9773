"""
Reference Comparison - 與已發表數值比對

presets/reference_results.yaml 記錄各 (SKU, model/true, 政策) 的月營業利潤，
以及 model = true 時的平均庫存與缺貨天數。
"""

import logging
from dataclasses import asdict, dataclass
from pathlib import Path

import yaml

from config import PRESETS_PATH
from demand.distributions import DistributionKind
from errors import ConfigError
from experiments.report import Metric, ReportTable

logger = logging.getLogger(__name__)

REFERENCE_PATH = PRESETS_PATH / "reference_results.yaml"

_KIND_BY_LABEL = {k.label: k for k in DistributionKind}


@dataclass(frozen=True)
class CellCheck:
    sku: str
    model_dist: str
    true_dist: str
    policy: str
    metric: str
    simulated: float
    reference: float
    tolerance: float
    passed: bool

    @property
    def rel_error(self) -> float:
        if self.reference == 0:
            return abs(self.simulated)
        return abs(self.simulated - self.reference) / abs(self.reference)

    def to_dict(self) -> dict:
        return {**asdict(self), "rel_error": self.rel_error}


def load_reference(path: Path = REFERENCE_PATH) -> dict:
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot read reference results {path} ({exc.__class__.__name__})") from exc
    if not isinstance(data, dict) or "tolerances" not in data:
        raise ConfigError(f"{path}: missing tolerances block")
    return data


def parse_scenario_label(label: str) -> tuple[str, DistributionKind, DistributionKind] | None:
    """'sku_a: Uniform/Log-normal' → ('sku_a', UNIFORM, LOGNORMAL)；無法解析時回傳 None"""
    sku, sep, pair = label.rpartition(": ")
    model, _, true = pair.partition("/")
    if not sep or model not in _KIND_BY_LABEL or true not in _KIND_BY_LABEL:
        return None
    return sku, _KIND_BY_LABEL[model], _KIND_BY_LABEL[true]


def _within(simulated: float, reference: float, rel_tol: float, abs_floor: float = 0.0) -> bool:
    return abs(simulated - reference) <= max(rel_tol * abs(reference), abs_floor)


def compare_with_reference(table: ReportTable, reference: dict) -> list[CellCheck]:
    """比對每個有參考值的格子

    利潤：model = true 用 matched_profit 容差，其餘依 |profit| 是否超過門檻用 5% / 15%。
    平均庫存與缺貨天數只比對 model = true 的情境。
    """
    tol = reference["tolerances"]
    checks = []
    for (label, policy, metric), stats in table.rows.items():
        parsed = parse_scenario_label(label)
        if parsed is None:
            continue
        sku, model_kind, true_kind = parsed
        matched = model_kind is true_kind

        if metric is Metric.PROFIT:
            cell = reference.get("profit", {}).get(sku, {}).get(f"{model_kind.value}/{true_kind.value}", {})
            if policy.value not in cell:
                continue
            ref = float(cell[policy.value])
            if matched:
                rel = tol["matched_profit"]
            elif abs(ref) > tol["robustness_profit_threshold"]:
                rel = tol["robustness_profit_large"]
            else:
                rel = tol["robustness_profit_small"]
            floor = 0.0
        else:
            if not matched:
                continue
            key = "avg_inventory" if metric is Metric.AVG_INVENTORY else "stockout_days"
            cell = reference.get(key, {}).get(sku, {}).get(model_kind.value, {})
            if policy.value not in cell:
                continue
            ref = float(cell[policy.value])
            rel = tol["inventory"] if metric is Metric.AVG_INVENTORY else tol["stockout_days"]
            floor = tol.get("stockout_days_floor", 0.0) if metric is Metric.STOCKOUT_DAYS else 0.0

        checks.append(
            CellCheck(
                sku=sku,
                model_dist=model_kind.value,
                true_dist=true_kind.value,
                policy=policy.value,
                metric=metric.value,
                simulated=stats.mean,
                reference=ref,
                tolerance=rel,
                passed=_within(stats.mean, ref, rel, floor),
            )
        )
    logger.debug("Compared %d cells against reference values", len(checks))
    return checks
