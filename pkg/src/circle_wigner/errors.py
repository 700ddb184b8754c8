"""Exception types raised by circle_wigner."""


class DomainError(ValueError):
    """An argument lies outside the domain where a function is defined."""


class ConvergenceError(ArithmeticError):
    """A series or quadrature failed to reach its tolerance within budget."""


class ConsistencyError(ArithmeticError):
    """Two evaluations that must agree (e.g. a real quantity) did not."""
