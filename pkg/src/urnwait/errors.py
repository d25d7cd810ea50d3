"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter set violates its declared constraints (e.g. c > m)."""


class DomainError(ValueError):
    """A function was evaluated outside its mathematical domain."""
