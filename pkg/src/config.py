"""
Batch Size Configuration

共用設定與路徑定義 (可用環境變數覆寫)
"""

import os
from pathlib import Path

# 專案路徑
PROJECT_ROOT = Path(__file__).parent.parent
PRESETS_PATH = PROJECT_ROOT / "presets"
DOCS_PATH = PROJECT_ROOT / "docs"

# 結果輸出
RESULTS_PATH = Path(os.getenv("BATCHSIZE_RESULTS_PATH", str(PROJECT_ROOT / "results")))

# 週期需求分位數表 (Monte Carlo 卷積)
QUANTILE_SAMPLES = int(os.getenv("BATCHSIZE_QUANTILE_SAMPLES", "1000000"))
QUANTILE_SEED = int(os.getenv("BATCHSIZE_QUANTILE_SEED", "7000000"))
_cache = os.getenv("BATCHSIZE_QUANTILE_CACHE")
QUANTILE_CACHE_PATH = Path(_cache) if _cache else None

# 模擬預設值
DEFAULT_RUNS = 900
DEFAULT_BASE_SEED = 20240
MAX_WORKERS = int(os.getenv("BATCHSIZE_MAX_WORKERS", str(os.cpu_count() or 1)))

# 日誌
LOG_LEVEL = os.getenv("BATCHSIZE_LOG_LEVEL", "INFO")

# 內建情境
PRESETS = ("sku_a", "sku_b")
