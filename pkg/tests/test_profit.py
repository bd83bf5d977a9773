"""Expected-profit objectives peak at the critical-fractile quantile."""

import numpy as np
import pytest

from demand.distributions import Uniform
from demand.periodic import MIN_SAMPLES, build_periodic_model, quantile
from errors import DomainError
from policy.profit import expected_profit, grid_search_optimum
from policy.rules import PolicyKind, critical_fractile

STEP = 5.0


@pytest.fixture(scope="module")
def model():
    return build_periodic_model(Uniform(a=235, b=810), 7, n_samples=MIN_SAMPLES, seed=21)


def test_model1_profit_at_zero(sku_a_econ, model):
    assert expected_profit(PolicyKind.MODEL1, 0.0, sku_a_econ, model) == 0.0


def test_fixed_cost_is_prorated_per_period(sku_a_econ, model):
    value = expected_profit(PolicyKind.MODEL3, 0.0, sku_a_econ, model)
    assert value == pytest.approx(-240000 * 7 / 23)


@pytest.mark.parametrize("kind", [PolicyKind.MODEL1, PolicyKind.MODEL2, PolicyKind.MODEL3])
def test_grid_optimum_matches_fractile(sku_a_econ, model, kind):
    grid = np.arange(2000.0, 6000.0, STEP)
    best = grid_search_optimum(kind, sku_a_econ, model, grid)
    target = quantile(model, critical_fractile(kind, sku_a_econ))
    assert abs(best - target) <= STEP + 1


def test_model1_and_model2_optima_close(sku_a_econ, model):
    grid = np.arange(2000.0, 6000.0, STEP)
    m1 = grid_search_optimum(PolicyKind.MODEL1, sku_a_econ, model, grid)
    m2 = grid_search_optimum(PolicyKind.MODEL2, sku_a_econ, model, grid)
    assert m2 <= m1
    assert (m1 - m2) / m1 < 0.01


def test_objective_vectorized(sku_a_econ, model):
    grid = np.array([1000.0, 3000.0, 5000.0])
    values = expected_profit(PolicyKind.MODEL2, grid, sku_a_econ, model, q0=500)
    assert values.shape == (3,)
    assert values[1] == pytest.approx(expected_profit(PolicyKind.MODEL2, 3000.0, sku_a_econ, model, q0=500))


def test_invalid_arguments(sku_a_econ, model):
    with pytest.raises(DomainError):
        expected_profit(PolicyKind.MODEL1, -1.0, sku_a_econ, model)
    with pytest.raises(DomainError):
        expected_profit(PolicyKind.SAFETY_STOCK, 100.0, sku_a_econ, model)
    with pytest.raises(DomainError):
        grid_search_optimum(PolicyKind.MODEL1, sku_a_econ, model, [])


def test_model3_best_on_coarse_grid(sku_a_econ, model):
    grid = np.arange(3000.0, 5501.0, 100.0)
    values = expected_profit(PolicyKind.MODEL3, grid, sku_a_econ, model)
    target = quantile(model, critical_fractile(PolicyKind.MODEL3, sku_a_econ))
    best = grid[int(np.argmax(values))]
    assert abs(best - target) <= 100
