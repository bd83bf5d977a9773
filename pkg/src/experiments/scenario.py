"""
Scenario - 情境設定

設定檔為 YAML (schema_version: 1)，內容包含：
- economics: 價格、成本、持有成本、安全庫存
- demand: 日需求 min / max / mean / stdev (用於擬合三種分布)
- distributions: 明確指定的分布參數 (覆寫擬合結果)
- simulation: 月數、每月工作天、週期 T、前置時間 T_l
- runs / base_seed / quantile_samples / quantile_seed / policies

內建 preset: sku_a, sku_b (presets/*.yaml)
"""

import logging
from pathlib import Path

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from config import DEFAULT_BASE_SEED, DEFAULT_RUNS, PRESETS, PRESETS_PATH, QUANTILE_SAMPLES, QUANTILE_SEED
from demand.distributions import (
    DailyDemandStats,
    DemandDistribution,
    DistributionKind,
    fit_daily_distributions,
)
from demand.periodic import MIN_SAMPLES
from errors import BatchSizeError, ConfigError
from policy.economics import SkuEconomics
from policy.rules import DEFAULT_POLICIES, PolicyKind
from simulation.engine import SimConfig

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class SimulationSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    months: int = Field(default=120, ge=1)
    days_per_month: int = Field(default=23, ge=1)
    period_days: int = Field(default=7, ge=1)
    lead_days: int = Field(default=7, ge=1)
    first_order_day: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_timing(self) -> "SimulationSettings":
        if not self.lead_days <= self.period_days <= self.days_per_month:
            raise ValueError("require lead_days <= period_days <= days_per_month")
        return self

    def sim_config(self, econ, policy, true_dist) -> SimConfig:
        return SimConfig(
            econ=econ,
            policy=policy,
            true_dist=true_dist,
            months=self.months,
            days_per_month=self.days_per_month,
            period_days=self.period_days,
            lead_days=self.lead_days,
            first_order_day=self.first_order_day,
        )


class Scenario(BaseModel):
    """一個 (model 分布, true 分布) 組合的模擬設定"""

    model_config = ConfigDict(frozen=True)

    name: str
    econ: SkuEconomics
    model_dist: DemandDistribution
    true_dist: DemandDistribution
    policies: tuple[PolicyKind, ...] = DEFAULT_POLICIES
    runs: int = Field(default=DEFAULT_RUNS, ge=1)
    sim: SimulationSettings = SimulationSettings()
    base_seed: int = DEFAULT_BASE_SEED
    quantile_samples: int = Field(default=QUANTILE_SAMPLES, ge=MIN_SAMPLES)
    quantile_seed: int = QUANTILE_SEED
    # 觀測到的日需求平均；Model 3 以 T × demand_mean 作為 E[D]
    demand_mean: float | None = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _check_policies(self) -> "Scenario":
        if not self.policies:
            raise ValueError("at least one policy is required")
        if len(set(self.policies)) != len(self.policies):
            raise ValueError("policies must not repeat")
        return self

    @property
    def label(self) -> str:
        return f"{self.name}: {_kind_label(self.model_dist)}/{_kind_label(self.true_dist)}"


def _kind_label(dist: DemandDistribution) -> str:
    return DistributionKind(dist.kind).label


class SkuConfig(BaseModel):
    """設定檔文件"""

    model_config = ConfigDict(frozen=True)

    schema_version: int = SCHEMA_VERSION
    name: str
    economics: SkuEconomics
    demand: DailyDemandStats | None = None
    distributions: dict[DistributionKind, DemandDistribution] = Field(default_factory=dict)
    simulation: SimulationSettings = SimulationSettings()
    policies: tuple[PolicyKind, ...] = DEFAULT_POLICIES
    runs: int = Field(default=DEFAULT_RUNS, ge=1)
    base_seed: int = DEFAULT_BASE_SEED
    quantile_samples: int = Field(default=QUANTILE_SAMPLES, ge=MIN_SAMPLES)
    quantile_seed: int = QUANTILE_SEED

    @model_validator(mode="after")
    def _check_document(self) -> "SkuConfig":
        if self.schema_version != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {self.schema_version}, expected {SCHEMA_VERSION}")
        for kind, dist in self.distributions.items():
            if dist.kind != kind.value:
                raise ValueError(f"distributions.{kind.value} has kind '{dist.kind}'")
        if self.demand is None and len(self.distributions) < len(DistributionKind):
            missing = [k.value for k in DistributionKind if k not in self.distributions]
            raise ValueError(f"no demand block to fit missing distributions: {', '.join(missing)}")
        return self

    def resolved_distributions(self) -> dict[DistributionKind, DemandDistribution]:
        """擬合的分布，再以明確指定者覆寫"""
        fitted = fit_daily_distributions(self.demand) if self.demand is not None else {}
        merged = {**fitted, **self.distributions}
        return {kind: merged[kind] for kind in DistributionKind if kind in merged}

    def scenario(
        self,
        model_kind: DistributionKind | str,
        true_kind: DistributionKind | str | None = None,
        **overrides,
    ) -> Scenario:
        dists = self.resolved_distributions()
        model_kind = DistributionKind(model_kind)
        true_kind = DistributionKind(true_kind) if true_kind is not None else model_kind
        fields = {
            "name": self.name,
            "econ": self.economics,
            "model_dist": dists[model_kind],
            "true_dist": dists[true_kind],
            "policies": self.policies,
            "runs": self.runs,
            "sim": self.simulation,
            "base_seed": self.base_seed,
            "quantile_samples": self.quantile_samples,
            "quantile_seed": self.quantile_seed,
            "demand_mean": self.demand.mean if self.demand is not None else None,
        }
        fields.update({k: v for k, v in overrides.items() if v is not None})
        return Scenario(**fields)


def _first_line(exc: ValidationError) -> str:
    err = exc.errors()[0]
    where = ".".join(str(part) for part in err["loc"]) or "document"
    return f"{where}: {err['msg']}"


def resolve_config_path(name_or_path: str | Path) -> Path:
    if str(name_or_path) in PRESETS:
        return PRESETS_PATH / f"{name_or_path}.yaml"
    return Path(name_or_path)


def load_config(name_or_path: str | Path) -> SkuConfig:
    """載入 preset 名稱或 YAML 檔案路徑

    Raises:
        ConfigError: 檔案不存在、YAML 格式錯誤或欄位驗證失敗
    """
    path = resolve_config_path(name_or_path)
    if not path.exists():
        raise ConfigError(f"config not found: {path} (presets: {', '.join(PRESETS)})")
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: invalid YAML ({exc.__class__.__name__})") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a mapping at the top level")
    data.setdefault("name", path.stem)
    try:
        config = SkuConfig.model_validate(data)
        config.resolved_distributions()
    except ValidationError as exc:
        raise ConfigError(f"{path}: {_first_line(exc)}") from exc
    except BatchSizeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    logger.debug("Loaded config %s from %s", config.name, path)
    return config


def dump_config(config: SkuConfig) -> str:
    """序列化回 YAML (寫入執行資料夾)"""
    data = config.model_dump(mode="json")
    return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)
