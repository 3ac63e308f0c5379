"""Exception types shared across modules."""


class DimensionCapError(ValueError):
    """An exponential enumeration was refused because the dimension exceeds
    the configured cap. Pass an override to force the computation."""


class FastPathUnavailableError(RuntimeError):
    """Fast-path-only policy was requested but no fast-path precondition
    holds for the given box."""
