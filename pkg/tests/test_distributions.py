"""Daily demand distributions: validation, sampling, analytic moments and moment fitting."""

import numpy as np
import pytest
from pydantic import ValidationError

from demand.distributions import (
    DailyDemandStats,
    DistributionKind,
    LogNormal,
    SampleMoments,
    Triangular,
    Uniform,
    fit_daily_distributions,
    fit_lognormal,
    fit_triangular_mode,
    mean,
    parse_distribution,
    sample,
    stdev,
)
from errors import DomainError


# ============ validation ============

@pytest.mark.parametrize(
    "factory",
    [
        lambda: Uniform(a=810, b=235),
        lambda: Uniform(a=-1, b=5),
        lambda: Triangular(a=0, b=85, c=90),
        lambda: Triangular(a=10, b=85, c=5),
        lambda: LogNormal(mu_l=1.0, sigma_l=0.0),
    ],
)
def test_invalid_parameters_rejected(factory):
    with pytest.raises(ValidationError):
        factory()


def test_parse_distribution_uses_kind_tag():
    dist = parse_distribution({"kind": "triangular", "a": 0, "b": 85, "c": 2})
    assert isinstance(dist, Triangular)
    assert dist.c == 2

    with pytest.raises(ValidationError):
        parse_distribution({"kind": "weibull", "a": 1})


def test_kind_labels():
    assert [k.label for k in DistributionKind] == ["Uniform", "Triangular", "Log-normal"]


# ============ sampling ============

def test_sample_scalar_and_array(sku_a_dists):
    rng = np.random.default_rng(1)
    for dist in sku_a_dists.values():
        assert isinstance(sample(dist, rng), float)
        values = sample(dist, rng, 1000)
        assert isinstance(values, np.ndarray)
        assert values.shape == (1000,)


def test_sample_bounds(sku_b_dists):
    rng = np.random.default_rng(2)
    for kind in (DistributionKind.UNIFORM, DistributionKind.TRIANGULAR):
        values = sample(sku_b_dists[kind], rng, 50_000)
        assert values.min() >= 0
        assert values.max() <= 85
    assert sample(sku_b_dists[DistributionKind.LOGNORMAL], rng, 50_000).min() > 0


def test_point_mass_sampling():
    rng = np.random.default_rng(3)
    np.testing.assert_array_equal(sample(Uniform(a=100, b=100), rng, 10), np.full(10, 100.0))
    np.testing.assert_array_equal(sample(Triangular(a=5, b=5, c=5), rng, 10), np.full(10, 5.0))


def test_same_seed_same_draws(sku_a_dists):
    dist = sku_a_dists[DistributionKind.LOGNORMAL]
    first = sample(dist, np.random.default_rng(42), 100)
    second = sample(dist, np.random.default_rng(42), 100)
    np.testing.assert_array_equal(first, second)


@pytest.mark.parametrize("kind", list(DistributionKind))
def test_sample_mean_matches_analytic(sku_a_dists, kind):
    dist = sku_a_dists[kind]
    values = sample(dist, np.random.default_rng(4), 200_000)
    assert values.mean() == pytest.approx(mean(dist), rel=0.005)
    assert values.std() == pytest.approx(stdev(dist), rel=0.02)


# ============ analytic moments ============

def test_analytic_moments_reproduce_sample_statistics(sku_a_dists, sku_b_dists):
    assert mean(sku_a_dists[DistributionKind.UNIFORM]) == 522.5
    assert stdev(sku_a_dists[DistributionKind.UNIFORM]) == pytest.approx(575 / np.sqrt(12))
    assert mean(sku_a_dists[DistributionKind.TRIANGULAR]) == pytest.approx(548.5217, rel=1e-6)
    assert mean(sku_a_dists[DistributionKind.LOGNORMAL]) == pytest.approx(548.5217, rel=1e-5)
    assert stdev(sku_a_dists[DistributionKind.LOGNORMAL]) == pytest.approx(159.3643, rel=1e-5)
    assert mean(sku_b_dists[DistributionKind.TRIANGULAR]) == pytest.approx(29)
    assert mean(sku_b_dists[DistributionKind.LOGNORMAL]) == pytest.approx(29, rel=1e-5)
    assert stdev(sku_b_dists[DistributionKind.LOGNORMAL]) == pytest.approx(31.28898, rel=1e-5)


# ============ fitting ============

@pytest.mark.parametrize(
    "m, s, mu_l, sigma_l",
    [
        (548.5217, 159.3643, 6.266708826, 0.284668531),
        (29, 31.28898, 2.98129577, 0.878635374),
    ],
)
def test_fit_lognormal_reference_parameters(m, s, mu_l, sigma_l):
    fitted = fit_lognormal(SampleMoments(m, s))
    assert fitted.mu_l == pytest.approx(mu_l, rel=1e-6)
    assert fitted.sigma_l == pytest.approx(sigma_l, rel=1e-6)


@pytest.mark.parametrize(
    "a, b, m, c",
    [
        (235, 810, 548.5217, 600.5652),
        (0, 85, 29, 2),
    ],
)
def test_fit_triangular_mode_reference_parameters(a, b, m, c):
    fitted = fit_triangular_mode(a, b, SampleMoments(m, 1.0))
    assert fitted.c == pytest.approx(c, rel=1e-6)
    assert fitted.mean() == pytest.approx(m, rel=1e-12)


def test_fit_triangular_mode_outside_range():
    with pytest.raises(DomainError, match="outside"):
        fit_triangular_mode(0, 85, SampleMoments(60, 10))
    with pytest.raises(DomainError):
        fit_triangular_mode(85, 85, SampleMoments(85, 1))


def test_fit_lognormal_domain():
    with pytest.raises(DomainError):
        SampleMoments(0, 1)
    with pytest.raises(DomainError):
        fit_lognormal(SampleMoments(10, 0))


def test_fit_daily_distributions():
    fitted = fit_daily_distributions(DailyDemandStats(minimum=0, maximum=85, mean=29, stdev=31.28898))
    assert list(fitted) == list(DistributionKind)
    assert fitted[DistributionKind.UNIFORM] == Uniform(a=0, b=85)
    assert fitted[DistributionKind.TRIANGULAR].c == pytest.approx(2)
    assert fitted[DistributionKind.LOGNORMAL].sigma_l == pytest.approx(0.878635374, rel=1e-6)


def test_fit_edge_cases():
    fitted = fit_lognormal(SampleMoments(np.sqrt(2), np.sqrt(2)))
    assert fitted.mu_l == pytest.approx(0.0, abs=1e-12)
    assert fitted.sigma_l == pytest.approx(np.sqrt(np.log(2)))
    assert fit_triangular_mode(0, 2, SampleMoments(1, 0.5)).c == pytest.approx(1)


def test_skewed_triangular_sample_mean(sku_b_dists):
    values = sample(sku_b_dists[DistributionKind.TRIANGULAR], np.random.default_rng(29), 1_000_000)
    assert abs(values.mean() - 29) < 0.5
