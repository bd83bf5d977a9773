#!/usr/bin/env python3
"""
Generate Simulation Charts - 產生模擬結果圖表

由結果資料夾的 summary.json 產生：
1. 各情境、各政策的月營業利潤 (含 95% 誤差界)
2. 穩健性矩陣 (model x true) 利潤熱圖，每個政策一張
3. 平均庫存 vs 缺貨天數散佈圖
4. chart_report.md 摘要
"""

import argparse
import sys
from pathlib import Path

import numpy as np

try:
    import matplotlib
    matplotlib.use("Agg")  # 無顯示器環境
    import matplotlib.pyplot as plt
    HAS_MATPLOTLIB = True
except ImportError:
    HAS_MATPLOTLIB = False
    print("Warning: matplotlib not installed. Charts will not be generated.")

# 確保 src 目錄在 path 中
src_dir = Path(__file__).parent.parent / "src"
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from config import RESULTS_PATH
from demand.distributions import DistributionKind
from experiments.output import load_summary
from experiments.reference import parse_scenario_label
from experiments.report import Metric, ReportTable

POLICY_COLORS = {
    "safety_stock": "#808080",
    "model1": "#d0d0e0",
    "model2": "#8080c0",
    "model3": "#4040a0",
    "model2_adjusted": "#c08040",
}

DIST_LABELS = [k.label for k in DistributionKind]


def generate_profit_chart(table: ReportTable, output_file: Path, title: str = "Monthly operating profit"):
    """各情境的利潤長條圖，誤差線為 MOE 95%"""
    if not HAS_MATPLOTLIB:
        return

    scenarios = table.scenarios
    policies = table.policies
    x = np.arange(len(scenarios))
    width = 0.8 / max(1, len(policies))

    fig, ax = plt.subplots(figsize=(max(8, 1.6 * len(scenarios)), 6))
    for i, policy in enumerate(policies):
        means, errors = [], []
        for scenario in scenarios:
            stats = table.rows.get((scenario, policy, Metric.PROFIT))
            means.append(stats.mean if stats else np.nan)
            errors.append(stats.moe95 if stats and stats.has_spread else 0.0)
        ax.bar(x + (i - (len(policies) - 1) / 2) * width, means, width, yerr=errors, capsize=3,
               label=policy.label, color=POLICY_COLORS.get(policy.value))

    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_xticks(x)
    ax.set_xticklabels(scenarios, rotation=30, ha="right")
    ax.set_ylabel("Profit per month")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(output_file, dpi=150)
    plt.close(fig)
    print(f"✅ Chart saved: {output_file}")


def generate_robustness_heatmap(table: ReportTable, output_file: Path) -> bool:
    """model x true 利潤熱圖 (僅限完整 3 x 3 矩陣)"""
    if not HAS_MATPLOTLIB:
        return False

    cells = {}
    for scenario in table.scenarios:
        parsed = parse_scenario_label(scenario)
        if parsed:
            cells[(parsed[1].label, parsed[2].label)] = scenario
    if len(cells) < len(DIST_LABELS) ** 2:
        return False

    policies = table.policies
    fig, axes = plt.subplots(1, len(policies), figsize=(4.2 * len(policies), 4), squeeze=False)
    for ax, policy in zip(axes[0], policies):
        grid = np.array([
            [table.get(cells[(model, true)], policy, Metric.PROFIT).mean for true in DIST_LABELS]
            for model in DIST_LABELS
        ])
        image = ax.imshow(grid, cmap="RdYlGn")
        for r in range(grid.shape[0]):
            for c in range(grid.shape[1]):
                ax.text(c, r, f"{grid[r, c]:,.0f}", ha="center", va="center", fontsize=8)
        ax.set_xticks(range(len(DIST_LABELS)))
        ax.set_xticklabels(DIST_LABELS, rotation=30)
        ax.set_yticks(range(len(DIST_LABELS)))
        ax.set_yticklabels(DIST_LABELS)
        ax.set_xlabel("True distribution")
        ax.set_ylabel("Model distribution")
        ax.set_title(policy.label)
        fig.colorbar(image, ax=ax, shrink=0.7)

    fig.tight_layout()
    fig.savefig(output_file, dpi=150)
    plt.close(fig)
    print(f"✅ Chart saved: {output_file}")
    return True


def generate_inventory_chart(table: ReportTable, output_file: Path):
    """平均庫存 vs 缺貨天數"""
    if not HAS_MATPLOTLIB:
        return

    fig, ax = plt.subplots(figsize=(8, 6))
    for policy in table.policies:
        xs, ys = [], []
        for scenario in table.scenarios:
            inv = table.rows.get((scenario, policy, Metric.AVG_INVENTORY))
            out = table.rows.get((scenario, policy, Metric.STOCKOUT_DAYS))
            if inv and out:
                xs.append(inv.mean)
                ys.append(out.mean)
        ax.scatter(xs, ys, label=policy.label, color=POLICY_COLORS.get(policy.value), edgecolors="black")

    ax.set_xlabel("Average inventory on hand")
    ax.set_ylabel("Stock-out days (whole horizon)")
    ax.set_title("Inventory vs stock-outs")
    ax.legend()
    fig.tight_layout()
    fig.savefig(output_file, dpi=150)
    plt.close(fig)
    print(f"✅ Chart saved: {output_file}")


def generate_report(table: ReportTable, summary: dict, charts: list[str], output_file: Path):
    """產生圖表摘要 Markdown"""
    params = summary.get("params", {})
    lines = [
        f"# {summary.get('command', 'run').title()} results",
        "",
        f"**Created**: {summary.get('created', '-')}",
        "",
        "| Parameter | Value |",
        "|-----------|-------|",
    ]
    lines += [f"| {k} | {v} |" for k, v in params.items()]
    lines += ["", "## Best policy per scenario", "", "| Scenario | Best policy | Profit |", "|---|---|---:|"]
    for scenario in table.scenarios:
        candidates = [
            (table.rows[(scenario, p, Metric.PROFIT)].mean, p)
            for p in table.policies if (scenario, p, Metric.PROFIT) in table.rows
        ]
        if candidates:
            profit, best = max(candidates, key=lambda item: item[0])
            lines.append(f"| {scenario} | {best.label} | {profit:,.0f} |")
    lines += ["", "## Charts", ""]
    lines += [f"![{name}]({name})" for name in charts]

    output_file.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"✅ Report saved: {output_file}")


def main():
    parser = argparse.ArgumentParser(description="Generate simulation charts and a summary report")
    parser.add_argument("--run-folder", type=str, help="Path to run folder (e.g., results/robustness_sku_a_xxx)")
    parser.add_argument("--output-dir", type=str, default=None, help="Output directory for charts")
    args = parser.parse_args()

    if args.run_folder:
        folder = Path(args.run_folder)
    else:
        # 自動找最新的執行結果
        run_folders = sorted(
            [d for d in RESULTS_PATH.iterdir() if d.is_dir() and (d / "summary.json").exists()],
            key=lambda d: d.stat().st_mtime,
            reverse=True,
        ) if RESULTS_PATH.exists() else []
        if not run_folders:
            print("❌ No run folders found in results/")
            return 1
        folder = run_folders[0]
        print(f"📁 Using latest run folder: {folder.name}")

    table, summary = load_summary(folder)
    output_dir = Path(args.output_dir) if args.output_dir else folder
    output_dir.mkdir(parents=True, exist_ok=True)

    charts = []
    generate_profit_chart(table, output_dir / "profit_chart.png")
    charts.append("profit_chart.png")
    if generate_robustness_heatmap(table, output_dir / "robustness_heatmap.png"):
        charts.append("robustness_heatmap.png")
    generate_inventory_chart(table, output_dir / "inventory_stockouts.png")
    charts.append("inventory_stockouts.png")
    if not HAS_MATPLOTLIB:
        charts = []
    generate_report(table, summary, charts, output_dir / "chart_report.md")
    return 0


if __name__ == "__main__":
    sys.exit(main())
