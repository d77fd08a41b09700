"""Shared exception types."""


class ConfigError(ValueError):
    """An experiment configuration violates an invariant; the message names
    the offending field."""
