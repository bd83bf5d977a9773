"""Simulation module - 逐日庫存模擬"""

from .engine import (
    TRACE_COLUMNS,
    RunResult,
    SimConfig,
    demand_stream,
    draw_demand_path,
    run_simulation,
    write_trace_csv,
)
from .state import PendingOrder, SimState

__all__ = [
    "TRACE_COLUMNS",
    "RunResult",
    "SimConfig",
    "demand_stream",
    "draw_demand_path",
    "run_simulation",
    "write_trace_csv",
    "PendingOrder",
    "SimState",
]
