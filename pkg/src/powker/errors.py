"""Error types shared across the package."""


class ConsistencyError(RuntimeError):
    """A mathematically guaranteed property failed to hold.

    Raised when a computation contradicts a proven fact (for example a
    kernel element that should be divisible by r is not).  Seeing this
    exception means the engine has a bug, not that the input was bad;
    bad input raises ValueError instead.
    """
