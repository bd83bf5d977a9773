"""
Periodic Demand - 週期需求的經驗分布

newsvendor 模型需要 T 天需求 D 的反累積分布 F^-1，但資料只有日需求分布。
這裡不假設 D 的分布型態，而是以 Monte Carlo 產生 T 個日需求的總和，
排序後以樣本分位數估計 F^-1。

- 建表使用獨立的 seed，與模擬 seed 分開，因此同一情境所有 run 的政策常數相同
- 建好的模型不可變，可在並行模擬之間共用
- 以 (distribution, T, n_samples, seed) 為 key 在記憶體快取，可選擇性寫入磁碟快取
"""

import hashlib
import json
import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np
from scipy.stats import norm

from config import QUANTILE_CACHE_PATH, QUANTILE_SAMPLES, QUANTILE_SEED
from demand.distributions import DemandDistribution, sample
from errors import DomainError

logger = logging.getLogger(__name__)

MIN_SAMPLES = 100_000
CACHE_FORMAT_VERSION = 1


@dataclass(frozen=True, eq=False)
class PeriodicDemandModel:
    """T 天需求總和的經驗分布 (已排序樣本) 與解析週期平均"""

    daily: DemandDistribution
    period_days: int
    samples: np.ndarray
    periodic_mean: float
    seed: int
    _prefix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.samples.setflags(write=False)
        # E[min{D,q}] 用的前綴和
        prefix = np.concatenate(([0.0], np.cumsum(self.samples)))
        prefix.setflags(write=False)
        object.__setattr__(self, "_prefix", prefix)

    @property
    def n_samples(self) -> int:
        return int(self.samples.size)


def _cache_file(cache_dir: Path, daily: DemandDistribution, period_days: int, n_samples: int, seed: int) -> Path:
    key = json.dumps(
        {
            "version": CACHE_FORMAT_VERSION,
            "daily": daily.model_dump(mode="json"),
            "period_days": period_days,
            "n_samples": n_samples,
            "seed": seed,
        },
        sort_keys=True,
    )
    digest = hashlib.sha256(key.encode("utf-8")).hexdigest()[:16]
    return cache_dir / f"periodic_v{CACHE_FORMAT_VERSION}_{digest}.npy"


def _draw_sums(daily: DemandDistribution, period_days: int, n_samples: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    totals = np.zeros(n_samples)
    # 逐日累加，避免一次配置 n x T 陣列
    for _ in range(period_days):
        totals += sample(daily, rng, n_samples)
    totals.sort()
    return totals


@lru_cache(maxsize=32)
def _build_cached(
    daily: DemandDistribution, period_days: int, n_samples: int, seed: int, cache_dir: Path | None
) -> PeriodicDemandModel:
    started = time.perf_counter()
    samples = None
    cache_file = None
    if cache_dir is not None:
        cache_file = _cache_file(cache_dir, daily, period_days, n_samples, seed)
        if cache_file.exists():
            samples = np.load(cache_file)
            logger.debug("Loaded periodic demand table from %s", cache_file)

    if samples is None:
        samples = _draw_sums(daily, period_days, n_samples, seed)
        if cache_file is not None:
            cache_file.parent.mkdir(parents=True, exist_ok=True)
            np.save(cache_file, samples)

    logger.debug(
        "Periodic demand table %s T=%d n=%d ready in %.2fs",
        daily.kind, period_days, n_samples, time.perf_counter() - started,
    )
    return PeriodicDemandModel(
        daily=daily,
        period_days=period_days,
        samples=samples,
        periodic_mean=period_days * daily.mean(),
        seed=seed,
    )


def build_periodic_model(
    daily: DemandDistribution,
    period_days: int,
    n_samples: int = QUANTILE_SAMPLES,
    seed: int = QUANTILE_SEED,
    cache_dir: Path | None = QUANTILE_CACHE_PATH,
) -> PeriodicDemandModel:
    """建立 T 天需求的經驗分布

    Args:
        daily: 日需求分布
        period_days: 週期長度 T (工作天)
        n_samples: Monte Carlo 樣本數 (至少 10^5)
        seed: 建表專用 seed
        cache_dir: 磁碟快取目錄 (None 表示不使用)

    Returns:
        PeriodicDemandModel (排序後的 T 天需求總和)
    """
    if period_days < 1:
        raise DomainError(f"period_days must be >= 1, got {period_days}")
    if n_samples < MIN_SAMPLES:
        raise DomainError(f"n_samples must be >= {MIN_SAMPLES}, got {n_samples}")
    return _build_cached(daily, int(period_days), int(n_samples), int(seed), cache_dir)


def quantile(model: PeriodicDemandModel, fractile: float) -> float:
    """F^-1(fractile)：順序統計量在 rank p(n-1) 的線性內插"""
    if not 0 < fractile < 1:
        raise DomainError(f"fractile must lie in (0, 1), got {fractile}")
    return float(np.quantile(model.samples, fractile, method="linear"))


def expected_periodic_demand(model: PeriodicDemandModel) -> float:
    """E[D] = T x 解析日平均 (不用樣本平均，避免雜訊)"""
    return model.periodic_mean


def empirical_cdf(model: PeriodicDemandModel, x):
    counts = np.searchsorted(model.samples, x, side="right")
    return counts / model.n_samples


def expected_sales(model: PeriodicDemandModel, q):
    """E[min{D, q}]，對 q 向量化"""
    q_arr = np.asarray(q, dtype=float)
    k = np.searchsorted(model.samples, q_arr, side="right")
    n = model.n_samples
    result = (model._prefix[k] + q_arr * (n - k)) / n
    return float(result) if result.ndim == 0 else result


def expected_leftover(model: PeriodicDemandModel, q):
    """E[max{q - D, 0}] = q - E[min{D, q}]"""
    return np.asarray(q, dtype=float) - expected_sales(model, q)


def normal_approximation_quantile(daily: DemandDistribution, period_days: int, fractile: float) -> float:
    """常態近似：T*mean + z(p)*sqrt(T)*stdev (僅供比對，不用於政策)"""
    if not 0 < fractile < 1:
        raise DomainError(f"fractile must lie in (0, 1), got {fractile}")
    return period_days * daily.mean() + float(norm.ppf(fractile)) * (period_days ** 0.5) * daily.stdev()
