"""
Summary Statistics - 跨 run 的彙總統計

平均數、樣本標準差 (n-1)、95% 誤差界 1.96 s / sqrt(n)、中位數與百分位數
(rank p(n-1) 線性內插)。
"""

import math
from dataclasses import dataclass, field

import numpy as np

from errors import DomainError

Z_95 = 1.96

# 各指標報告的百分位數
PROFIT_FRACTILES = (0.10, 0.05)
INVENTORY_FRACTILES = (0.95, 0.99)
STOCKOUT_FRACTILES = (0.95, 0.99)


@dataclass(frozen=True)
class AggregateStats:
    n: int
    mean: float
    median: float
    minimum: float
    maximum: float
    percentiles: dict[float, float] = field(default_factory=dict)
    sample_stdev: float | None = None

    @property
    def has_spread(self) -> bool:
        return self.sample_stdev is not None

    @property
    def stdev(self) -> float:
        if self.sample_stdev is None:
            raise DomainError(f"standard deviation needs at least 2 values, got n={self.n}")
        return self.sample_stdev

    @property
    def moe95(self) -> float:
        return Z_95 * self.stdev / math.sqrt(self.n)

    def to_dict(self) -> dict:
        data = {
            "n": self.n,
            "mean": self.mean,
            "median": self.median,
            "min": self.minimum,
            "max": self.maximum,
            "percentiles": {f"{p:g}": v for p, v in self.percentiles.items()},
        }
        if self.has_spread:
            data["stdev"] = self.stdev
            data["moe95"] = self.moe95
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "AggregateStats":
        return cls(
            n=int(data["n"]),
            mean=float(data["mean"]),
            median=float(data["median"]),
            minimum=float(data["min"]),
            maximum=float(data["max"]),
            percentiles={float(p): float(v) for p, v in data.get("percentiles", {}).items()},
            sample_stdev=float(data["stdev"]) if "stdev" in data else None,
        )


def aggregate(values, fractiles=()) -> AggregateStats:
    """彙總一組 run 的指標值

    Args:
        values: 各 run 的指標值 (至少一個)
        fractiles: 要計算的百分位數 (皆在 (0, 1) 內)

    Returns:
        AggregateStats；n < 2 時 stdev / moe95 存取會拋出 DomainError
    """
    data = np.asarray(values, dtype=float)
    if data.size == 0:
        raise DomainError("cannot aggregate an empty list")
    for p in fractiles:
        if not 0 < p < 1:
            raise DomainError(f"fractile must lie in (0, 1), got {p}")

    # 排序後再加總，結果與輸入順序無關
    data = np.sort(data)
    percentiles = {float(p): float(np.quantile(data, p, method="linear")) for p in fractiles}
    return AggregateStats(
        n=int(data.size),
        mean=float(np.mean(data)),
        median=float(np.median(data)),
        minimum=float(data[0]),
        maximum=float(data[-1]),
        percentiles=percentiles,
        sample_stdev=float(np.std(data, ddof=1)) if data.size >= 2 else None,
    )
