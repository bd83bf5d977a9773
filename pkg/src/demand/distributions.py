"""
Daily Demand Distributions - 日需求分布

三種日需求模型 (uniform / triangular / log-normal)，提供：
1. 抽樣 - 由呼叫端持有的 numpy Generator 決定性抽樣
2. 解析動差 - 平均數與標準差
3. 參數擬合 - 由樣本平均數與標準差推估參數

分布值為 frozen pydantic model，可作為快取 key，並以 kind 欄位區分 (設定檔格式)。
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from errors import DomainError


class DistributionKind(str, Enum):
    UNIFORM = "uniform"
    TRIANGULAR = "triangular"
    LOGNORMAL = "lognormal"

    @property
    def label(self) -> str:
        return {"uniform": "Uniform", "triangular": "Triangular", "lognormal": "Log-normal"}[self.value]


class Uniform(BaseModel):
    """均勻分布 [a, b]；a = b 為點質量 (測試用)"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["uniform"] = "uniform"
    a: float = Field(ge=0)
    b: float = Field(ge=0)

    @model_validator(mode="after")
    def _check_order(self) -> "Uniform":
        if self.a > self.b:
            raise ValueError(f"uniform requires a <= b, got a={self.a}, b={self.b}")
        return self

    def mean(self) -> float:
        return (self.a + self.b) / 2

    def stdev(self) -> float:
        return (self.b - self.a) / math.sqrt(12)

    def draw(self, rng: np.random.Generator, size: int | tuple | None = None):
        return rng.uniform(self.a, self.b, size)


class Triangular(BaseModel):
    """三角分布 [a, b]，眾數 c"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["triangular"] = "triangular"
    a: float = Field(ge=0)
    b: float = Field(ge=0)
    c: float = Field(ge=0)

    @model_validator(mode="after")
    def _check_order(self) -> "Triangular":
        if not (self.a <= self.c <= self.b):
            raise ValueError(
                f"triangular requires a <= c <= b, got a={self.a}, c={self.c}, b={self.b}"
            )
        return self

    def mean(self) -> float:
        return (self.a + self.b + self.c) / 3

    def stdev(self) -> float:
        a, b, c = self.a, self.b, self.c
        return math.sqrt((a * a + b * b + c * c - a * b - a * c - b * c) / 18)

    def draw(self, rng: np.random.Generator, size: int | tuple | None = None):
        # 反函數法 (closed-form CDF inverse)
        u = rng.random(size)
        a, b, c = self.a, self.b, self.c
        width = b - a
        if width == 0:
            return a + 0.0 * u
        split = (c - a) / width
        left = a + np.sqrt(u * width * (c - a))
        right = b - np.sqrt((1.0 - u) * width * (b - c))
        values = np.where(u < split, left, right)
        return float(values) if size is None else values


class LogNormal(BaseModel):
    """對數常態分布，參數為 ln(D) 的平均數與標準差"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["lognormal"] = "lognormal"
    mu_l: float
    sigma_l: float = Field(gt=0)

    def mean(self) -> float:
        return math.exp(self.mu_l + self.sigma_l**2 / 2)

    def stdev(self) -> float:
        return self.mean() * math.sqrt(math.expm1(self.sigma_l**2))

    def draw(self, rng: np.random.Generator, size: int | tuple | None = None):
        values = np.exp(self.mu_l + self.sigma_l * rng.standard_normal(size))
        return float(values) if size is None else values


DemandDistribution = Annotated[Union[Uniform, Triangular, LogNormal], Field(discriminator="kind")]

_ADAPTER = TypeAdapter(DemandDistribution)


def parse_distribution(data: dict) -> DemandDistribution:
    """由 {"kind": ..., 參數...} 建立分布 (設定檔與 MCP 工具使用)"""
    return _ADAPTER.validate_python(data)


def sample(dist: DemandDistribution, rng: np.random.Generator, size: int | tuple | None = None):
    """抽樣日需求；size=None 回傳單一 float，否則回傳 ndarray"""
    return dist.draw(rng, size)


def mean(dist: DemandDistribution) -> float:
    return dist.mean()


def stdev(dist: DemandDistribution) -> float:
    return dist.stdev()


@dataclass(frozen=True)
class SampleMoments:
    """樣本平均數 m 與樣本標準差 s (units/day)"""

    mean: float
    stdev: float

    def __post_init__(self):
        if not self.mean > 0:
            raise DomainError(f"sample mean must be positive, got {self.mean}")
        if not self.stdev >= 0:
            raise DomainError(f"sample stdev must be nonnegative, got {self.stdev}")


class DailyDemandStats(BaseModel):
    """日需求樣本摘要 (min / max / mean / stdev)"""

    model_config = ConfigDict(frozen=True)

    minimum: float = Field(ge=0)
    maximum: float = Field(ge=0)
    mean: float = Field(gt=0)
    stdev: float = Field(gt=0)

    @property
    def moments(self) -> SampleMoments:
        return SampleMoments(self.mean, self.stdev)


def fit_lognormal(moments: SampleMoments) -> LogNormal:
    """以動差法擬合對數常態：mu_l = ln(m^2/sqrt(m^2+s^2))，sigma_l = sqrt(ln(1+s^2/m^2))"""
    m, s = moments.mean, moments.stdev
    if m <= 0 or s <= 0:
        raise DomainError(f"log-normal fit requires m > 0 and s > 0, got m={m}, s={s}")
    mu_l = math.log(m * m / math.sqrt(m * m + s * s))
    sigma_l = math.sqrt(math.log1p(s * s / (m * m)))
    return LogNormal(mu_l=mu_l, sigma_l=sigma_l)


def fit_triangular_mode(a: float, b: float, moments: SampleMoments) -> Triangular:
    """選擇眾數 c 使三角分布平均數等於樣本平均數：c = 3m - a - b"""
    if not a < b:
        raise DomainError(f"triangular fit requires a < b, got a={a}, b={b}")
    c = 3 * moments.mean - a - b
    if not (a <= c <= b):
        raise DomainError(
            f"mode 3m - a - b = {c:.6g} falls outside [{a}, {b}]; sample mean incompatible with range"
        )
    return Triangular(a=a, b=b, c=c)


def fit_daily_distributions(stats: DailyDemandStats) -> dict[DistributionKind, DemandDistribution]:
    """由日需求摘要擬合三種分布"""
    moments = stats.moments
    return {
        DistributionKind.UNIFORM: Uniform(a=stats.minimum, b=stats.maximum),
        DistributionKind.TRIANGULAR: fit_triangular_mode(stats.minimum, stats.maximum, moments),
        DistributionKind.LOGNORMAL: fit_lognormal(moments),
    }
