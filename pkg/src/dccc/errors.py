"""Exception types shared across the package."""


class RangeError(ValueError):
    """An input lies outside the numeric range an operation supports.

    Raised instead of silently producing values beyond the documented
    64-bit envelope, and by search/solver entry points whose state space
    would exceed their tractability bound.
    """
