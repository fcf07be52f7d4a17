"""Exception types shared across the package."""


class OrderLimitError(ValueError):
    """A polynomial order exceeds the configured ceiling."""


class ConvergenceError(ArithmeticError):
    """An iterative numerical procedure failed to converge."""
