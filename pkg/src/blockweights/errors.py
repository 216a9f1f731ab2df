"""Typed errors shared across the package."""


class BlockweightsError(Exception):
    """Base class for all package errors."""


class DomainError(BlockweightsError, ValueError):
    """An argument lies outside an operation's mathematical domain."""


class ConfigurationError(BlockweightsError, ValueError):
    """Invalid instance parameters (bad prime power, ell = p, size guard)."""


class UnsupportedModeError(BlockweightsError, RuntimeError):
    """A quantity that is not provided in the requested mode."""


class InvariantViolationError(BlockweightsError, RuntimeError):
    """An internal counting identity failed; never ignore this."""
