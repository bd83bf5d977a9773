#!/usr/bin/env python3
"""
Newsvendor Batch Size CLI

子命令:
- fit: 日需求摘要 → 三種分布參數
- fractile: 經濟參數 → 三個模型的臨界分位數
- quantile: 分布 + 分位數 → 週期訂購量 (--table 輸出所有分布 x 政策)
- simulate: 單一 (model, true) 情境
- robustness: 3 x 3 (model, true) 矩陣
- sweep: 不同持有成本 h 的情境
- report: 重新輸出已儲存的結果資料夾

結束碼: 0 成功；2 設定或數學定義域錯誤；1 非預期錯誤
"""

import argparse
import logging
import sys
from pathlib import Path

# 確保 src 目錄在 path 中
src_dir = Path(__file__).parent
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from pydantic import ValidationError

from config import LOG_LEVEL, MAX_WORKERS, RESULTS_PATH
from demand.distributions import DailyDemandStats, DistributionKind, fit_daily_distributions
from demand.periodic import build_periodic_model, normal_approximation_quantile, quantile
from errors import BatchSizeError, ConfigError, DomainError
from experiments.output import RunFolder, load_summary
from experiments.report import FORMATS, Metric, ReportTable, render_report
from experiments.runner import run_config_matrix, run_holding_cost_sweep, run_scenario
from experiments.scenario import load_config
from helpers import setup_logging
from policy.economics import SkuEconomics
from policy.rules import PolicyKind, critical_fractile
from policy.tables import TABLE_POLICIES, base_order_table

logger = logging.getLogger("cli")

NEWSVENDOR_KINDS = (PolicyKind.MODEL1, PolicyKind.MODEL2, PolicyKind.MODEL3)


def _one_line(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        err = exc.errors()[0]
        where = ".".join(str(part) for part in err["loc"])
        return f"{where}: {err['msg']}" if where else err["msg"]
    text = str(exc).strip()
    return text.splitlines()[0] if text else type(exc).__name__


def _format_params(dist) -> str:
    params = dist.model_dump(exclude={"kind"})
    return "  ".join(f"{k}={v:.9g}" for k, v in params.items())


# ============ fit / fractile / quantile ============

def cmd_fit(args) -> int:
    moments = (args.min, args.max, args.mean, args.stdev)
    if any(v is not None for v in moments):
        if any(v is None for v in moments):
            raise ConfigError("fit needs all of --min, --max, --mean and --stdev")
        stats = DailyDemandStats(minimum=args.min, maximum=args.max, mean=args.mean, stdev=args.stdev)
        source = "command line"
    else:
        config = load_config(args.config)
        if config.demand is None:
            raise ConfigError(f"{config.name} has no demand block to fit from")
        stats = config.demand
        source = config.name

    fitted = fit_daily_distributions(stats)
    print(f"✅ Fitted daily demand ({source}: min={stats.minimum:g}, max={stats.maximum:g}, "
          f"mean={stats.mean:g}, stdev={stats.stdev:g})")
    for kind, dist in fitted.items():
        print(f"  {kind.label:<12} {_format_params(dist)}")
    return 0


def cmd_fractile(args) -> int:
    if args.price is not None or args.variable_cost is not None:
        if args.price is None or args.variable_cost is None:
            raise ConfigError("fractile needs both --price and --variable-cost")
        econ = SkuEconomics(price=args.price, variable_cost=args.variable_cost,
                            holding_cost=args.holding_cost or 0.0)
    else:
        econ = load_config(args.config).economics

    print(f"📊 Critical fractiles (p={econ.price:g}, c_v={econ.variable_cost:g}, h={econ.holding_cost:g})")
    for kind in NEWSVENDOR_KINDS:
        try:
            value = f"{critical_fractile(kind, econ):.9f}"
        except DomainError:
            value = "n/a (needs h > 0)"
        print(f"  {kind.label:<8} {value}")
    return 0


def _render_order_table(table, fmt: str, precision: int) -> str:
    kinds = list(next(iter(table.values())).keys())
    if fmt == "csv":
        lines = ["distribution," + ",".join(k.label for k in kinds)]
        for dist, row in table.items():
            lines.append(dist.label + "," + ",".join(f"{row[k]:.{precision}f}" for k in kinds))
    else:
        lines = [
            "| Distribution | " + " | ".join(k.label for k in kinds) + " |",
            "|---|" + "|".join("---:" for _ in kinds) + "|",
        ]
        for dist, row in table.items():
            lines.append(f"| {dist.label} | " + " | ".join(f"{row[k]:,.{precision}f}" for k in kinds) + " |")
    return "\n".join(lines) + "\n"


def cmd_quantile(args) -> int:
    config = load_config(args.config)

    if args.table:
        table = base_order_table(config, TABLE_POLICIES)
        print(_render_order_table(table, args.format, args.precision), end="")
        return 0

    if (args.fractile is None) == (args.policy is None):
        raise ConfigError("quantile needs exactly one of --fractile or --policy (or --table)")
    fractile = args.fractile
    if args.policy is not None:
        fractile = critical_fractile(PolicyKind(args.policy), config.economics)

    daily = config.resolved_distributions()[DistributionKind(args.dist)]
    period_days = config.simulation.period_days
    model = build_periodic_model(daily, period_days, n_samples=config.quantile_samples, seed=config.quantile_seed)
    value = quantile(model, fractile)
    print(f"✅ F^-1({fractile:.9g}) = {value:,.{args.precision}f} units per {period_days}-day period "
          f"({DistributionKind(args.dist).label}, n={model.n_samples})")
    if args.compare_normal:
        approx = normal_approximation_quantile(daily, period_days, fractile)
        gap = (approx - value) / value * 100 if value else float("nan")
        print(f"  normal approximation {approx:,.{args.precision}f} ({gap:+.2f}%)")
    return 0


# ============ simulate / robustness / sweep / report ============

def _trace_dir(args, folder: RunFolder | None) -> Path | None:
    if not args.trace:
        return None
    return folder.path if folder is not None else Path(args.out)


def _finish(args, table: ReportTable, folder: RunFolder | None, command: str, config, params: dict) -> int:
    print(render_report(table, args.format, precision=args.precision), end="")
    if folder is not None:
        folder.save(table, command=command, config=config, params=params, precision=args.precision)
        print(f"\n📁 Saved to: {folder.path}", file=sys.stderr)
    return 0


def _open_folder(args, command: str, config) -> RunFolder | None:
    if args.no_save:
        return None
    return RunFolder.create(Path(args.out), f"{command}_{config.name}")


def cmd_simulate(args) -> int:
    config = load_config(args.config)
    overrides = {"runs": args.runs, "base_seed": args.seed}
    if args.policies:
        overrides["policies"] = tuple(PolicyKind(p) for p in args.policies)
    s = config.scenario(args.model_dist, args.true_dist, **overrides)

    folder = _open_folder(args, "simulate", config)
    results = run_scenario(s, max_workers=args.workers, trace_dir=_trace_dir(args, folder))
    table = ReportTable()
    table.add_results(s.label, results)
    params = {
        "config": config.name,
        "model_dist": s.model_dist.kind,
        "true_dist": s.true_dist.kind,
        "policies": [p.value for p in s.policies],
        "runs": s.runs,
        "base_seed": s.base_seed,
    }
    return _finish(args, table, folder, "simulate", config, params)


def cmd_robustness(args) -> int:
    config = load_config(args.config)
    folder = _open_folder(args, "robustness", config)
    table = run_config_matrix(
        config, runs=args.runs, base_seed=args.seed, max_workers=args.workers,
        trace_dir=_trace_dir(args, folder),
    )
    params = {
        "config": config.name,
        "policies": [p.value for p in config.policies],
        "runs": config.runs if args.runs is None else args.runs,
        "base_seed": config.base_seed if args.seed is None else args.seed,
    }
    return _finish(args, table, folder, "robustness", config, params)


def cmd_sweep(args) -> int:
    config = load_config(args.config)
    folder = _open_folder(args, "sweep", config)
    table = run_holding_cost_sweep(
        config, args.dist, args.holding_costs, runs=args.runs, base_seed=args.seed, max_workers=args.workers,
    )
    params = {
        "config": config.name,
        "dist": args.dist,
        "holding_costs": list(args.holding_costs),
        "runs": config.runs if args.runs is None else args.runs,
        "base_seed": config.base_seed if args.seed is None else args.seed,
    }
    return _finish(args, table, folder, "sweep", config, params)


def cmd_report(args) -> int:
    table, summary = load_summary(Path(args.folder))
    print(render_report(table, args.format, metrics=args.metrics, precision=args.precision), end="")
    logger.debug("Rendered %s report from %s", summary.get("command"), args.folder)
    return 0


# ============ parser ============

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default="sku_a", help="Preset name (sku_a, sku_b) or YAML config path")
    common.add_argument("--seed", type=int, default=None, help="Base seed of the demand streams")
    common.add_argument("--runs", type=int, default=None, help="Runs per scenario (config default 900)")
    common.add_argument("--out", default=str(RESULTS_PATH), help="Results root for run folders")
    common.add_argument("--format", choices=FORMATS, default="markdown", help="Report format")
    common.add_argument("--precision", type=int, default=2, help="Decimals in printed values")
    common.add_argument("--trace", action="store_true", help="Write day-by-day CSV traces of run 0")
    common.add_argument("--workers", type=int, default=MAX_WORKERS, help="Worker processes (1 = in-process)")
    common.add_argument("--log-level", default=LOG_LEVEL, help="DEBUG, INFO, WARNING, ...")
    common.add_argument("--no-save", action="store_true", help="Print only; do not create a run folder")

    parser = argparse.ArgumentParser(description="Newsvendor production batch sizing and inventory simulation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", parents=[common], help="Fit daily demand distributions from sample statistics")
    p.add_argument("--min", type=float)
    p.add_argument("--max", type=float)
    p.add_argument("--mean", type=float)
    p.add_argument("--stdev", type=float)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("fractile", parents=[common], help="Critical fractiles of the newsvendor models")
    p.add_argument("--price", type=float)
    p.add_argument("--variable-cost", type=float)
    p.add_argument("--holding-cost", type=float)
    p.set_defaults(func=cmd_fractile)

    p = sub.add_parser("quantile", parents=[common], help="Order-up-to quantity of periodic demand")
    p.add_argument("--dist", choices=[k.value for k in DistributionKind], default="uniform")
    p.add_argument("--fractile", type=float)
    p.add_argument("--policy", choices=[k.value for k in PolicyKind if k.is_newsvendor])
    p.add_argument("--table", action="store_true", help="Base quantities for every distribution and policy")
    p.add_argument("--compare-normal", action="store_true", help="Also print the normal approximation")
    p.set_defaults(func=cmd_quantile)

    p = sub.add_parser("simulate", parents=[common], help="Simulate one model/true scenario")
    p.add_argument("--model-dist", choices=[k.value for k in DistributionKind], default="uniform")
    p.add_argument("--true-dist", choices=[k.value for k in DistributionKind], default=None)
    p.add_argument("--policies", nargs="+", choices=[k.value for k in PolicyKind])
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("robustness", parents=[common], help="All nine model/true distribution pairs")
    p.set_defaults(func=cmd_robustness)

    p = sub.add_parser("sweep", parents=[common], help="Re-run a matched scenario over holding costs")
    p.add_argument("--dist", choices=[k.value for k in DistributionKind], default="uniform")
    p.add_argument("--holding-costs", type=float, nargs="+", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("report", parents=[common], help="Re-render a saved run folder")
    p.add_argument("folder", help="Run folder (or its summary.json)")
    p.add_argument("--metrics", nargs="*", choices=[m.value for m in Metric], default=None)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    try:
        return args.func(args)
    except (BatchSizeError, ValidationError) as exc:
        print(f"❌ error: {_one_line(exc)}", file=sys.stderr)
        return 2
    except Exception:
        logger.exception("Unexpected failure in '%s'", args.command)
        return 1


if __name__ == "__main__":
    sys.exit(main())
