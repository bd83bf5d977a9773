"""Resources module - MCP 資源暴露"""

from .presets import register_resources

__all__ = ["register_resources"]
