"""Helpers module - 輔助工具"""

from .logging_setup import setup_logging
from .responses import UNITS_NOTE, error_response, with_units
from .stats import AggregateStats, aggregate

__all__ = [
    "setup_logging",
    "UNITS_NOTE",
    "error_response",
    "with_units",
    "AggregateStats",
    "aggregate",
]
