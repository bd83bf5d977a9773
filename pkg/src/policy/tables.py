"""Base order-size table: one row per daily distribution, one column per policy."""

import logging

from demand.distributions import DistributionKind
from demand.periodic import build_periodic_model
from policy.rules import PolicyKind, build_policy

logger = logging.getLogger(__name__)

TABLE_POLICIES = (PolicyKind.SAFETY_STOCK, PolicyKind.MODEL1, PolicyKind.MODEL2, PolicyKind.MODEL3)


def base_order_table(config, kinds=TABLE_POLICIES) -> dict[DistributionKind, dict[PolicyKind, float]]:
    """各分布下各政策的基準訂購量

    Args:
        config: SkuConfig (economics / 分布 / simulation / quantile 設定)
        kinds: 欄位政策

    Returns:
        {分布: {政策: base quantity}}；Model 3 為扣除 q̂0 前的 F^-1 值
    """
    kinds = [PolicyKind(k) for k in kinds]
    table = {}
    for dist_kind, daily in config.resolved_distributions().items():
        model = None
        if any(k.is_newsvendor for k in kinds):
            model = build_periodic_model(
                daily,
                config.simulation.period_days,
                n_samples=config.quantile_samples,
                seed=config.quantile_seed,
            )
        table[dist_kind] = {
            k: build_policy(k, config.economics, model, config.simulation.lead_days).base_quantity
            for k in kinds
        }
        logger.debug("Base quantities for %s/%s: %s", config.name, dist_kind.value, table[dist_kind])
    return table
