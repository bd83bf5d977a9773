"""
Demand Tools - 需求分布與週期分位數工具

提供給 MCP Server 註冊的需求工具函數
"""

import asyncio

from mcp.server.fastmcp import FastMCP

from config import QUANTILE_SAMPLES, QUANTILE_SEED
from demand.distributions import DailyDemandStats, fit_daily_distributions, parse_distribution
from demand.periodic import build_periodic_model, normal_approximation_quantile, quantile
from errors import BatchSizeError
from helpers import error_response, with_units


def register_demand_tools(mcp: FastMCP):
    """向 MCP Server 註冊需求工具

    Args:
        mcp: FastMCP 實例
    """

    @mcp.tool()
    async def fit_distributions(minimum: float, maximum: float, mean: float, stdev: float) -> str:
        """Fit uniform, triangular and log-normal daily demand distributions from sample statistics.

        Uniform spans [minimum, maximum]; the triangular mode is chosen so its mean equals the
        sample mean; the log-normal matches the sample mean and standard deviation.

        Args:
            minimum: Smallest observed daily demand
            maximum: Largest observed daily demand
            mean: Sample mean of daily demand
            stdev: Sample standard deviation of daily demand
        """
        try:
            stats = DailyDemandStats(minimum=minimum, maximum=maximum, mean=mean, stdev=stdev)
            fitted = fit_daily_distributions(stats)
        except (BatchSizeError, ValueError) as exc:
            return error_response(exc, hint="the triangular mode 3*mean - min - max must lie in [min, max]")

        return with_units({
            kind.value: {**dist.model_dump(), "mean": dist.mean(), "stdev": dist.stdev()}
            for kind, dist in fitted.items()
        })

    @mcp.tool()
    async def periodic_quantile(
        distribution: dict,
        fractile: float,
        period_days: int = 7,
        n_samples: int = QUANTILE_SAMPLES,
        seed: int = QUANTILE_SEED,
        compare_normal: bool = False,
    ) -> str:
        """Order-up-to quantity F^-1(fractile) of demand summed over period_days working days.

        Args:
            distribution: Daily demand, e.g. {"kind": "uniform", "a": 235, "b": 810},
                {"kind": "triangular", "a": 0, "b": 85, "c": 2} or
                {"kind": "lognormal", "mu_l": 6.27, "sigma_l": 0.28}
            fractile: Critical fractile in (0, 1)
            period_days: Ordering period T in working days
            n_samples: Monte Carlo samples of the periodic sum (>= 100000)
            seed: Seed of the sampling stream
            compare_normal: Also report the normal approximation
        """
        try:
            daily = parse_distribution(distribution)
            model = await asyncio.to_thread(
                build_periodic_model, daily, period_days, n_samples=n_samples, seed=seed
            )
            result = {
                "distribution": daily.model_dump(),
                "period_days": period_days,
                "fractile": fractile,
                "quantile": quantile(model, fractile),
                "expected_periodic_demand": model.periodic_mean,
                "n_samples": model.n_samples,
            }
            if compare_normal:
                result["normal_approximation"] = normal_approximation_quantile(daily, period_days, fractile)
        except (BatchSizeError, ValueError) as exc:
            return error_response(exc)
        return with_units(result)
