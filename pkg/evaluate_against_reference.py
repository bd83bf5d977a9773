#!/usr/bin/env python3
"""
與已發表結果比對

讀取結果資料夾的 summary.json，對照 presets/reference_results.yaml，
印出每個格子的誤差並寫出 comparison.json
"""

import json
import sys
from datetime import datetime
from pathlib import Path

# 確保 src 目錄在 path 中
sys.path.insert(0, str(Path(__file__).parent / "src"))

from config import RESULTS_PATH
from errors import BatchSizeError
from experiments.output import load_summary
from experiments.reference import REFERENCE_PATH, compare_with_reference, load_reference


def main():
    import argparse
    parser = argparse.ArgumentParser(description="Compare a run folder with published reference values")
    parser.add_argument("--folder", "-f", type=str, default=None,
                        help="Run folder to evaluate. Latest folder in results/ if not specified.")
    parser.add_argument("--reference", "-r", type=str, default=str(REFERENCE_PATH),
                        help="Reference results YAML")
    args = parser.parse_args()

    if args.folder:
        folder = Path(args.folder)
    else:
        folders = sorted(
            [d for d in RESULTS_PATH.glob("*") if (d / "summary.json").exists()],
            key=lambda d: d.stat().st_mtime,
        )
        if not folders:
            print(f"No run folders found in {RESULTS_PATH}")
            return 1
        folder = folders[-1]

    try:
        table, summary = load_summary(folder)
        reference = load_reference(Path(args.reference))
    except BatchSizeError as exc:
        print(f"❌ error: {exc}", file=sys.stderr)
        return 2

    print(f"📁 Evaluating: {folder}")
    checks = compare_with_reference(table, reference)
    if not checks:
        print("⚠️ No cells in this run have reference values")
        return 0

    print("\n" + "=" * 70)
    print("📊 REFERENCE COMPARISON")
    print("=" * 70)
    for c in checks:
        status = "✅" if c.passed else "❌"
        print(f"{status} {c.sku} {c.model_dist}/{c.true_dist} {c.policy:<14} {c.metric:<14} "
              f"sim={c.simulated:>12,.1f} ref={c.reference:>12,.1f} err={c.rel_error * 100:6.2f}% "
              f"(tol {c.tolerance * 100:.0f}%)")

    passed = sum(c.passed for c in checks)
    print("-" * 70)
    print(f"🎯 TOTAL: {passed}/{len(checks)} ({passed / len(checks) * 100:.1f}%) within tolerance")
    print("=" * 70)

    output = {
        "folder": str(folder),
        "command": summary.get("command"),
        "evaluated_at": datetime.now().isoformat(timespec="seconds"),
        "passed": passed,
        "total": len(checks),
        "cells": [c.to_dict() for c in checks],
    }
    output_file = folder / "comparison.json"
    with open(output_file, "w", encoding="utf-8") as f:
        json.dump(output, f, indent=2, ensure_ascii=False)
    print(f"\n📁 Saved to: {output_file}")
    return 0 if passed == len(checks) else 3


if __name__ == "__main__":
    sys.exit(main())
