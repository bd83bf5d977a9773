"""
Simulation State - 單次模擬的狀態追蹤

管理庫存、在途訂單、利潤與缺貨天數
"""

from dataclasses import dataclass


@dataclass
class PendingOrder:
    quantity: float
    due_day: int


class SimState:
    """單次 run 的逐日狀態 (一次 run 只由一個執行緒推進)"""

    def __init__(self, on_hand: float = 0.0, last_order_day: int = 0):
        self.reset(on_hand, last_order_day)

    def reset(self, on_hand: float = 0.0, last_order_day: int = 0):
        """重置所有狀態"""
        self.day = 0
        self.on_hand = float(on_hand)
        self.pending: list[PendingOrder] = []
        self.profit = 0.0
        self.stockout_days = 0
        self.inventory_day_sum = 0.0
        self.last_order_day = last_order_day
        self.units_sold = 0.0
        self.lost_units = 0.0
        self.orders_placed = 0

    @property
    def outstanding(self) -> float:
        """在途訂單總量"""
        return sum(order.quantity for order in self.pending)

    @property
    def has_pending(self) -> bool:
        return len(self.pending) > 0

    def receive(self, day: int) -> float:
        """將到期訂單入庫，回傳當日到貨量"""
        if not self.pending:
            return 0.0
        arrived = 0.0
        still_pending = []
        for order in self.pending:
            if order.due_day == day:
                arrived += order.quantity
            else:
                still_pending.append(order)
        self.pending = still_pending
        self.on_hand += arrived
        return arrived

    def place_order(self, quantity: float, due_day: int):
        """下單 (數量為 0 時只記錄決策日)"""
        self.last_order_day = self.day
        if quantity > 0:
            self.pending.append(PendingOrder(quantity, due_day))
            self.orders_placed += 1

    def sell(self, demand: float) -> float:
        """以現有庫存滿足需求，回傳銷售量"""
        sold = demand if demand < self.on_hand else self.on_hand
        self.on_hand -= sold
        self.units_sold += sold
        if demand > sold:
            self.stockout_days += 1
            self.lost_units += demand - sold
        return sold
