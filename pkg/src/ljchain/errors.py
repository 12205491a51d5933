"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid experiment configuration (bad field, empty grid, out-of-range cap)."""


class ConsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagree beyond tolerance."""
