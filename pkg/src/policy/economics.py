"""SKU economics - price, costs and the safety-stock buffer of one product."""

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SkuEconomics(BaseModel):
    """單一 SKU 的經濟參數

    holding_cost 為每單位每月的持有成本 (模擬中按 h / days_per_month 逐日計提)
    """

    model_config = ConfigDict(frozen=True)

    price: float = Field(gt=0)
    variable_cost: float = Field(ge=0)
    fixed_cost_monthly: float = Field(default=0.0, ge=0)
    holding_cost: float = Field(default=0.0, ge=0)
    safety_buffer: float = Field(default=0.0, ge=0)

    @model_validator(mode="after")
    def _check_margins(self) -> "SkuEconomics":
        if not self.price > self.variable_cost:
            raise ValueError(
                f"price must exceed variable cost, got p={self.price}, c_v={self.variable_cost}"
            )
        if not self.price - self.variable_cost - self.holding_cost / 2 > 0:
            raise ValueError("p - c_v - h/2 must be positive")
        return self

    @property
    def margin(self) -> float:
        return self.price - self.variable_cost

    def scaled(self, factor: float) -> "SkuEconomics":
        """價格與成本同乘一個正數 (臨界分位數不變)"""
        return self.model_copy(
            update={
                "price": self.price * factor,
                "variable_cost": self.variable_cost * factor,
                "holding_cost": self.holding_cost * factor,
                "fixed_cost_monthly": self.fixed_cost_monthly * factor,
            }
        )
