"""Demand module - 日需求分布與週期需求分位數"""

from .distributions import (
    DailyDemandStats,
    DemandDistribution,
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
from .periodic import (
    PeriodicDemandModel,
    build_periodic_model,
    empirical_cdf,
    expected_leftover,
    expected_periodic_demand,
    expected_sales,
    normal_approximation_quantile,
    quantile,
)
from .tools import register_demand_tools

__all__ = [
    "DailyDemandStats",
    "DemandDistribution",
    "DistributionKind",
    "LogNormal",
    "SampleMoments",
    "Triangular",
    "Uniform",
    "fit_daily_distributions",
    "fit_lognormal",
    "fit_triangular_mode",
    "mean",
    "parse_distribution",
    "sample",
    "stdev",
    "PeriodicDemandModel",
    "build_periodic_model",
    "empirical_cdf",
    "expected_leftover",
    "expected_periodic_demand",
    "expected_sales",
    "normal_approximation_quantile",
    "quantile",
    "register_demand_tools",
]
