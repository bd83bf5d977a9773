"""Scenario configs: presets, distribution resolution and validation errors."""

import pytest

from demand.distributions import DistributionKind, Triangular, Uniform
from errors import ConfigError
from experiments.scenario import SimulationSettings, dump_config, load_config
from policy.rules import PolicyKind


@pytest.mark.parametrize("name, buffer", [("sku_a", 5670), ("sku_b", 595)])
def test_presets_load(name, buffer):
    config = load_config(name)
    assert config.name == name
    assert config.economics.safety_buffer == buffer
    assert config.runs == 900
    assert config.simulation == SimulationSettings()
    assert list(config.resolved_distributions()) == list(DistributionKind)


def test_explicit_distributions_override_fit():
    config = load_config("sku_a")
    dists = config.resolved_distributions()
    # 參數表的眾數 600.5652，擬合值 600.5651
    assert dists[DistributionKind.TRIANGULAR].c == 600.5652


def test_fit_used_when_no_explicit_distributions(tmp_path):
    path = tmp_path / "fitted.yaml"
    path.write_text(
        "economics: {price: 100, variable_cost: 60, holding_cost: 2.8, safety_buffer: 595}\n"
        "demand: {minimum: 0, maximum: 85, mean: 29, stdev: 31.28898}\n",
        encoding="utf-8",
    )
    config = load_config(path)
    assert config.name == "fitted"
    dists = config.resolved_distributions()
    assert dists[DistributionKind.UNIFORM] == Uniform(a=0, b=85)
    assert dists[DistributionKind.TRIANGULAR].c == pytest.approx(2)
    assert dists[DistributionKind.LOGNORMAL].mu_l == pytest.approx(2.98129577, rel=1e-6)


def test_scenario_label_and_overrides(small_config):
    scenario = small_config.scenario("uniform", "lognormal", runs=7, base_seed=None)
    assert scenario.label == "sku_b: Uniform/Log-normal"
    assert scenario.runs == 7
    assert scenario.base_seed == small_config.base_seed
    assert scenario.sim.months == 2

    matched = small_config.scenario(DistributionKind.TRIANGULAR)
    assert matched.model_dist == matched.true_dist
    assert isinstance(matched.true_dist, Triangular)


def test_dump_and_reload(tmp_path, small_config):
    path = tmp_path / "copy.yaml"
    path.write_text(dump_config(small_config), encoding="utf-8")
    assert load_config(path) == small_config


@pytest.mark.parametrize(
    "text, message",
    [
        ("economics: [1, 2\n", "invalid YAML"),
        ("- a list\n", "mapping"),
        ("schema_version: 2\nname: x\neconomics: {price: 100, variable_cost: 60}\n", "schema_version"),
        ("economics: {price: 50, variable_cost: 60}\ndemand: {minimum: 0, maximum: 85, mean: 29, stdev: 31}\n",
         "economics"),
        ("economics: {price: 100, variable_cost: 60}\n", "demand"),
        ("economics: {price: 100, variable_cost: 60}\ndemand: {minimum: 0, maximum: 85, mean: 60, stdev: 31}\n",
         "outside"),
        ("economics: {price: 100, variable_cost: 60}\ndemand: {minimum: 0, maximum: 85, mean: 29, stdev: 31}\n"
         "policies: [model4]\n", "policies"),
    ],
)
def test_invalid_configs(tmp_path, text, message):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError, match=message):
        load_config(path)


def test_missing_config():
    with pytest.raises(ConfigError, match="not found"):
        load_config("no_such_preset")


def test_default_policies_exclude_adjusted_variant():
    assert PolicyKind.MODEL2_ADJUSTED not in load_config("sku_b").policies


def test_scenario_carries_observed_demand_mean(tmp_path):
    assert load_config("sku_a").scenario("uniform").demand_mean == pytest.approx(548.5217)
    assert load_config("sku_b").scenario("lognormal", "uniform").demand_mean == 29

    path = tmp_path / "tabulated.yaml"
    path.write_text(
        "economics: {price: 100, variable_cost: 60, holding_cost: 2.8, safety_buffer: 595}\n"
        "distributions:\n"
        "  uniform: {kind: uniform, a: 0, b: 85}\n"
        "  triangular: {kind: triangular, a: 0, b: 85, c: 2}\n"
        "  lognormal: {kind: lognormal, mu_l: 2.98, sigma_l: 0.88}\n",
        encoding="utf-8",
    )
    assert load_config(path).scenario("uniform").demand_mean is None
