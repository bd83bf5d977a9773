"""
Report - 報表表格與輸出格式

ReportTable 以 (情境, 政策, 指標) 為 key 存放 AggregateStats。
輸出格式：
- csv: 每列一個 (情境, 指標)，欄位為各政策平均值
- markdown: 同 csv 的 Markdown 表格
- detailed: 每個情境、每個指標的 Average / MOE 95% / St.dev. / Median / 百分位數
"""

import csv
import io
from dataclasses import dataclass, field
from enum import Enum

from errors import DomainError
from helpers.stats import (
    INVENTORY_FRACTILES,
    PROFIT_FRACTILES,
    STOCKOUT_FRACTILES,
    AggregateStats,
)
from policy.rules import REPORT_ORDER, PolicyKind


class Metric(str, Enum):
    PROFIT = "profit"
    AVG_INVENTORY = "avg_inventory"
    STOCKOUT_DAYS = "stockout_days"

    @property
    def label(self) -> str:
        return METRIC_LABELS[self]

    @property
    def fractiles(self) -> tuple[float, ...]:
        return METRIC_FRACTILES[self]


METRIC_LABELS = {
    Metric.PROFIT: "Operating profit",
    Metric.AVG_INVENTORY: "Average inventory on hand",
    Metric.STOCKOUT_DAYS: "Stock-out days",
}
METRIC_FRACTILES = {
    Metric.PROFIT: PROFIT_FRACTILES,
    Metric.AVG_INVENTORY: INVENTORY_FRACTILES,
    Metric.STOCKOUT_DAYS: STOCKOUT_FRACTILES,
}

FORMATS = ("csv", "markdown", "detailed")


@dataclass(frozen=True)
class PolicyMetrics:
    """單一政策的三個彙總指標"""

    profit: AggregateStats
    avg_inventory: AggregateStats
    stockout_days: AggregateStats

    def get(self, metric: Metric) -> AggregateStats:
        return getattr(self, metric.value)


@dataclass
class ReportTable:
    rows: dict[tuple[str, PolicyKind, Metric], AggregateStats] = field(default_factory=dict)

    def add(self, scenario: str, policy: PolicyKind, metric: Metric, stats: AggregateStats):
        key = (scenario, PolicyKind(policy), Metric(metric))
        if key in self.rows:
            raise DomainError(f"duplicate report row {scenario} / {key[1].value} / {key[2].value}")
        self.rows[key] = stats

    def add_results(self, scenario: str, results: dict[PolicyKind, PolicyMetrics]):
        for policy, metrics in results.items():
            for metric in Metric:
                self.add(scenario, policy, metric, metrics.get(metric))

    def merge(self, other: "ReportTable"):
        for (scenario, policy, metric), stats in other.rows.items():
            self.add(scenario, policy, metric, stats)

    def get(self, scenario: str, policy: PolicyKind, metric: Metric) -> AggregateStats:
        return self.rows[(scenario, PolicyKind(policy), Metric(metric))]

    @property
    def scenarios(self) -> list[str]:
        seen = {}
        for scenario, _, _ in self.rows:
            seen.setdefault(scenario, None)
        return list(seen)

    @property
    def policies(self) -> list[PolicyKind]:
        present = {policy for _, policy, _ in self.rows}
        return [p for p in REPORT_ORDER if p in present]

    @property
    def metrics(self) -> list[Metric]:
        present = {metric for _, _, metric in self.rows}
        return [m for m in Metric if m in present]

    def __len__(self) -> int:
        return len(self.rows)

    def to_dict(self) -> dict:
        return {
            "rows": [
                {"scenario": s, "policy": p.value, "metric": m.value, "stats": stats.to_dict()}
                for (s, p, m), stats in self.rows.items()
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReportTable":
        table = cls()
        for row in data.get("rows", []):
            table.add(row["scenario"], PolicyKind(row["policy"]), Metric(row["metric"]),
                      AggregateStats.from_dict(row["stats"]))
        return table


def _selected_metrics(table: ReportTable, metrics) -> list[Metric]:
    if metrics is None:
        return table.metrics
    return [Metric(m) for m in metrics]


def _render_csv(table: ReportTable, metrics: list[Metric], precision: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    policies = table.policies
    writer.writerow(["scenario", "metric", *[p.label for p in policies]])
    for scenario in table.scenarios:
        for metric in metrics:
            cells = []
            for policy in policies:
                stats = table.rows.get((scenario, policy, metric))
                cells.append("" if stats is None else f"{stats.mean:.{precision}f}")
            writer.writerow([scenario, metric.value, *cells])
    return buffer.getvalue()


def _render_markdown(table: ReportTable, metrics: list[Metric], precision: int) -> str:
    policies = table.policies
    header = ["Scenario", "Metric", *[p.label for p in policies]]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(["---"] * 2 + ["---:"] * len(policies)) + "|",
    ]
    for scenario in table.scenarios:
        for metric in metrics:
            cells = []
            for policy in policies:
                stats = table.rows.get((scenario, policy, metric))
                cells.append("-" if stats is None else f"{stats.mean:,.{precision}f}")
            lines.append("| " + " | ".join([scenario, metric.label, *cells]) + " |")
    return "\n".join(lines) + "\n"


def _percentile_label(p: float) -> str:
    return f"{round(p * 100):d}th perc."


def _render_detailed(table: ReportTable, metrics: list[Metric], precision: int) -> str:
    policies = table.policies
    out = []
    for scenario in table.scenarios:
        out.append(f"### {scenario}\n")
        for metric in metrics:
            present = [p for p in policies if (scenario, p, metric) in table.rows]
            if not present:
                continue
            stats_by_policy = {p: table.rows[(scenario, p, metric)] for p in present}
            out.append(f"**{metric.label}**\n")
            out.append("| Metric | " + " | ".join(p.label for p in present) + " |")
            out.append("|---|" + "|".join("---:" for _ in present) + "|")

            def row(label, value_of):
                cells = []
                for p in present:
                    try:
                        cells.append(value_of(stats_by_policy[p]))
                    except DomainError:
                        cells.append("n/a")
                out.append(f"| {label} | " + " | ".join(cells) + " |")

            row("Average", lambda s: f"{s.mean:,.{precision}f}")
            row("MOE 95%", lambda s: f"±{s.moe95:,.{precision}f}")
            row("St.dev.", lambda s: f"{s.stdev:,.{precision}f}")
            row("Median", lambda s: f"{s.median:,.{precision}f}")
            fractiles = sorted({f for s in stats_by_policy.values() for f in s.percentiles}, reverse=True)
            for f in fractiles:
                row(_percentile_label(f), lambda s, f=f: f"{s.percentiles[f]:,.{precision}f}")
            out.append("")
    return "\n".join(out) + "\n"


def render_report(table: ReportTable, format: str = "csv", metrics=None, precision: int = 2) -> str:
    """輸出報表文字

    Args:
        table: ReportTable
        format: csv | markdown | detailed
        metrics: 要輸出的指標 (None 表示全部；空清單只輸出表頭)
        precision: 小數位數

    Returns:
        報表文字 (欄位順序固定：Safety stock, Model 1, Model 2, Model 3, Model 2 adjusted)
    """
    selected = _selected_metrics(table, metrics)
    if format == "csv":
        return _render_csv(table, selected, precision)
    if format == "markdown":
        return _render_markdown(table, selected, precision)
    if format == "detailed":
        return _render_detailed(table, selected, precision)
    raise DomainError(f"unknown report format '{format}' (choose from {', '.join(FORMATS)})")
