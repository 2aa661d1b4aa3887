"""Shared exception types."""


class GuardExceeded(RuntimeError):
    """An exact search or enumeration was asked to exceed its size guard."""


class RetryLimitExceeded(RuntimeError):
    """A rejection sampler gave up before finding a valid sample."""
