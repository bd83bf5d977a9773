"""MCP tool and resource registration, called without a running server."""

import asyncio
import json

import pytest

from demand import register_demand_tools
from demand.periodic import MIN_SAMPLES
from experiments import register_experiment_tools
from helpers import error_response, with_units
from policy import register_policy_tools
from resources import register_resources


class FakeMCP:
    """只收集被註冊的函數"""

    def __init__(self):
        self.tools = {}
        self.resources = {}

    def tool(self):
        def decorator(fn):
            self.tools[fn.__name__] = fn
            return fn
        return decorator

    def resource(self, uri):
        def decorator(fn):
            self.resources[uri] = fn
            return fn
        return decorator


@pytest.fixture(scope="module")
def mcp():
    fake = FakeMCP()
    register_demand_tools(fake)
    register_policy_tools(fake)
    register_experiment_tools(fake)
    register_resources(fake)
    return fake


def call(mcp, name, **kwargs) -> dict:
    return json.loads(asyncio.run(mcp.tools[name](**kwargs)))


FLAT = {"kind": "uniform", "a": 100, "b": 100}


def test_registered_names(mcp):
    assert set(mcp.tools) == {
        "fit_distributions", "periodic_quantile", "critical_fractiles", "order_size",
        "list_presets", "base_orders", "simulate_scenario", "robustness_matrix",
    }
    assert set(mcp.resources) == {"batch://presets", "batch://presets/{name}", "batch://docs/result-format"}


def test_critical_fractiles(mcp):
    result = call(mcp, "critical_fractiles", price=100, variable_cost=60, holding_cost=2.8)
    assert result["model1"] == pytest.approx(0.4)
    assert result["model3"] == pytest.approx(38.6 / 41.4)
    assert "_units" in result

    assert call(mcp, "critical_fractiles", price=100, variable_cost=60)["model3"] is None
    assert "error" in call(mcp, "critical_fractiles", price=50, variable_cost=60)


def test_fit_distributions(mcp):
    result = call(mcp, "fit_distributions", minimum=0, maximum=85, mean=29, stdev=31.28898)
    assert result["triangular"]["c"] == pytest.approx(2)
    assert result["lognormal"]["mean"] == pytest.approx(29)

    failed = call(mcp, "fit_distributions", minimum=0, maximum=85, mean=60, stdev=31)
    assert "error" in failed and "hint" in failed


def test_periodic_quantile(mcp):
    result = call(mcp, "periodic_quantile", distribution=FLAT, fractile=0.5, n_samples=MIN_SAMPLES,
                  compare_normal=True)
    assert result["quantile"] == 700
    assert result["normal_approximation"] == pytest.approx(700)
    assert result["expected_periodic_demand"] == 700

    assert "error" in call(mcp, "periodic_quantile", distribution=FLAT, fractile=0.5, n_samples=10)
    assert "error" in call(mcp, "periodic_quantile", distribution={"kind": "weibull"}, fractile=0.5)


def test_order_size(mcp):
    adjusted = call(mcp, "order_size", policy="model2_adjusted", distribution=FLAT, on_hand=200,
                    price=100, variable_cost=60, holding_cost=2.8, n_samples=MIN_SAMPLES)
    assert adjusted["base_quantity"] == 700
    assert adjusted["order_quantity"] == 500

    safety = call(mcp, "order_size", policy="safety_stock", distribution={}, on_hand=100,
                  price=100, variable_cost=60, safety_buffer=500)
    assert safety["order_quantity"] == 500

    model3 = dict(policy="model3", distribution=FLAT, on_hand=600, price=100, variable_cost=60,
                  holding_cost=2.8, n_samples=MIN_SAMPLES)
    assert call(mcp, "order_size", **model3)["order_quantity"] == pytest.approx(800)
    assert call(mcp, "order_size", daily_mean=80, **model3)["order_quantity"] == pytest.approx(660)

    assert "error" in call(mcp, "order_size", policy="model9", distribution=FLAT, on_hand=0,
                           price=100, variable_cost=60)


def test_list_presets(mcp):
    result = call(mcp, "list_presets")
    assert result["sku_a"]["economics"]["safety_buffer"] == 5670
    assert result["sku_b"]["distributions"]["triangular"]["c"] == 2


def test_simulate_scenario(mcp, small_config_file):
    result = call(mcp, "simulate_scenario", preset=str(small_config_file), model_dist="uniform",
                  true_dist="lognormal", runs=2, policies=["model1", "model3"])
    assert result["scenario"] == "sku_b: Uniform/Log-normal"
    assert len(result["rows"]) == 2 * 3
    assert {row["policy"] for row in result["rows"]} == {"model1", "model3"}

    assert "error" in call(mcp, "simulate_scenario", preset=str(small_config_file), model_dist="weibull")
    assert "error" in call(mcp, "simulate_scenario", preset="missing_preset")


def test_resources(mcp):
    assert "batch://presets/sku_a" in mcp.resources["batch://presets"]()
    assert "safety_buffer: 595" in mcp.resources["batch://presets/{name}"]("sku_b")
    assert mcp.resources["batch://presets/{name}"]("nope").startswith("# Unknown preset")
    assert mcp.resources["batch://docs/result-format"]().startswith("#")


def test_reply_helpers():
    result = {"order_quantity": 660}
    reply = json.loads(with_units(result))
    assert reply["order_quantity"] == 660
    assert reply["_units"].startswith("📏 UNITS")
    assert result == {"order_quantity": 660}

    assert json.loads(error_response(ValueError("bad\nmore"), hint="h")) == {"error": "bad", "hint": "h"}
