"""Cross-run summary statistics."""

import math

import numpy as np
import pytest

from errors import DomainError
from helpers.stats import PROFIT_FRACTILES, AggregateStats, aggregate


def test_moe95_from_published_spread():
    stats = AggregateStats(n=900, mean=0.0, median=0.0, minimum=0.0, maximum=0.0, sample_stdev=3032.6)
    assert stats.moe95 == pytest.approx(198.1, abs=0.5)


def test_moe95_identity():
    values = np.random.default_rng(0).normal(1000, 250, 400)
    stats = aggregate(values)
    assert stats.moe95 == pytest.approx(1.96 * stats.stdev / math.sqrt(400), rel=1e-12)
    assert stats.stdev == pytest.approx(np.std(values, ddof=1))


def test_constant_values():
    stats = aggregate([5, 5, 5, 5])
    assert stats.mean == 5
    assert stats.stdev == 0
    assert stats.moe95 == 0
    assert (stats.minimum, stats.maximum, stats.median) == (5, 5, 5)


def test_linear_percentiles():
    stats = aggregate(range(1, 101), fractiles=(0.95, 0.99, 0.05))
    assert stats.percentiles[0.95] == pytest.approx(95.05)
    assert stats.percentiles[0.99] == pytest.approx(99.01)
    assert stats.percentiles[0.05] == pytest.approx(5.95)
    assert stats.median == 50.5


def test_single_value_has_no_spread():
    stats = aggregate([42.0], fractiles=PROFIT_FRACTILES)
    assert not stats.has_spread
    assert stats.percentiles[0.10] == 42.0
    with pytest.raises(DomainError):
        stats.stdev
    with pytest.raises(DomainError):
        stats.moe95
    assert "stdev" not in stats.to_dict()


def test_order_of_runs_does_not_matter():
    values = np.random.default_rng(1).lognormal(3, 0.8, 257)
    shuffled = np.random.default_rng(2).permutation(values)
    assert aggregate(values, (0.1, 0.9)) == aggregate(shuffled, (0.1, 0.9))


def test_invalid_inputs():
    with pytest.raises(DomainError):
        aggregate([])
    with pytest.raises(DomainError):
        aggregate([1, 2, 3], fractiles=(1.0,))


def test_dict_round_trip():
    stats = aggregate([3.0, 1.0, 2.0, 10.0], fractiles=(0.95,))
    assert AggregateStats.from_dict(stats.to_dict()) == stats
