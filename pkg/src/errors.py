"""Error types shared by the library, the CLI and the MCP tools."""


class BatchSizeError(Exception):
    """Base class for expected, user-facing failures."""


class DomainError(BatchSizeError, ValueError):
    """A value falls outside the mathematical domain of an operation."""


class ConfigError(BatchSizeError):
    """A scenario document or simulation setting is invalid."""
