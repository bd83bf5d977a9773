"""Shared fixtures: economics and daily demand distributions of the two shipped SKUs."""

import sys
from pathlib import Path

import pytest

# 確保 src 目錄在 path 中
src_dir = Path(__file__).parent.parent / "src"
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from demand.distributions import DistributionKind, LogNormal, Triangular, Uniform
from demand.periodic import MIN_SAMPLES
from experiments.scenario import SimulationSettings, load_config
from policy.economics import SkuEconomics

# 測試用的縮小規模
SMALL_SAMPLES = MIN_SAMPLES


@pytest.fixture
def sku_a_econ() -> SkuEconomics:
    return SkuEconomics(price=100, variable_cost=60, fixed_cost_monthly=240000, holding_cost=2.8, safety_buffer=5670)


@pytest.fixture
def sku_b_econ() -> SkuEconomics:
    return SkuEconomics(price=100, variable_cost=60, fixed_cost_monthly=14000, holding_cost=2.8, safety_buffer=595)


@pytest.fixture
def sku_a_dists() -> dict:
    return {
        DistributionKind.UNIFORM: Uniform(a=235, b=810),
        DistributionKind.TRIANGULAR: Triangular(a=235, b=810, c=600.5652),
        DistributionKind.LOGNORMAL: LogNormal(mu_l=6.266708826, sigma_l=0.284668531),
    }


@pytest.fixture
def sku_b_dists() -> dict:
    return {
        DistributionKind.UNIFORM: Uniform(a=0, b=85),
        DistributionKind.TRIANGULAR: Triangular(a=0, b=85, c=2),
        DistributionKind.LOGNORMAL: LogNormal(mu_l=2.98129577, sigma_l=0.878635374),
    }


@pytest.fixture
def small_config():
    """sku_b 縮小版：2 個月、最少的分位數樣本、3 runs"""
    return load_config("sku_b").model_copy(
        update={
            "simulation": SimulationSettings(months=2),
            "quantile_samples": SMALL_SAMPLES,
            "runs": 3,
        }
    )


@pytest.fixture
def small_config_file(tmp_path, small_config) -> Path:
    from experiments.scenario import dump_config

    path = tmp_path / "small.yaml"
    path.write_text(dump_config(small_config), encoding="utf-8")
    return path
