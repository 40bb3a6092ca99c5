"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input violates a mathematical precondition (wrong region, mismatch...)."""


class PoleError(DomainError):
    """Evaluation requested at (or numerically on top of) the pole s = 1."""


class CapacityError(ValueError):
    """Request exceeds a configured resource bound (sieve size, search space)."""


class PrecisionError(RuntimeError):
    """Requested accuracy could not be certified at the configured depth."""
