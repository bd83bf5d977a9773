"""
Run Folder - 實驗結果輸出

結構：
results/
  {label}_{timestamp}/
    summary.json     # ReportTable 與執行參數
    report.csv       # 各政策平均值 (csv)
    report.md        # 各政策平均值 (markdown)
    details.md       # Average / MOE 95% / St.dev. / Median / 百分位數
    config.yaml      # 使用的設定檔
    trace_*.csv      # 選用：run 0 的逐日追蹤
"""

import json
import logging
from datetime import datetime
from pathlib import Path

from errors import ConfigError
from experiments.report import ReportTable, render_report
from experiments.scenario import SkuConfig, dump_config

logger = logging.getLogger(__name__)

SUMMARY_FILE = "summary.json"


class RunFolder:
    """一次 CLI 執行的輸出資料夾"""

    def __init__(self, path: Path):
        self.path = Path(path)

    @classmethod
    def create(cls, base_path: Path, label: str, timestamp: str | None = None) -> "RunFolder":
        """建立 {label}_{YYYYmmdd_HHMMSS} 資料夾"""
        timestamp = timestamp or datetime.now().strftime("%Y%m%d_%H%M%S")
        folder = Path(base_path) / f"{label}_{timestamp}"
        folder.mkdir(parents=True, exist_ok=True)
        return cls(folder)

    def save(self, table: ReportTable, *, command: str, config: SkuConfig | None = None,
             params: dict | None = None, precision: int = 2) -> dict:
        """寫入所有報表檔案，回傳各檔案路徑"""
        summary = {
            "command": command,
            "created": datetime.now().isoformat(timespec="seconds"),
            "params": params or {},
            "table": table.to_dict(),
        }
        files = {"summary": self.path / SUMMARY_FILE}
        with open(files["summary"], "w", encoding="utf-8") as f:
            json.dump(summary, f, indent=2, ensure_ascii=False)

        for key, name, fmt in (
            ("csv", "report.csv", "csv"),
            ("markdown", "report.md", "markdown"),
            ("details", "details.md", "detailed"),
        ):
            files[key] = self.path / name
            with open(files[key], "w", encoding="utf-8", newline="") as f:
                f.write(render_report(table, fmt, precision=precision))

        if config is not None:
            files["config"] = self.path / "config.yaml"
            files["config"].write_text(dump_config(config), encoding="utf-8")

        logger.info("Saved %d report rows to %s", len(table), self.path)
        return {key: str(path) for key, path in files.items()}


def load_summary(folder: Path) -> tuple[ReportTable, dict]:
    """讀回 summary.json

    Raises:
        ConfigError: 找不到或格式錯誤
    """
    path = Path(folder)
    if path.is_dir():
        path = path / SUMMARY_FILE
    if not path.exists():
        raise ConfigError(f"no {SUMMARY_FILE} found at {path}")
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        return ReportTable.from_dict(data["table"]), data
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise ConfigError(f"{path}: unreadable summary ({exc.__class__.__name__})") from exc
