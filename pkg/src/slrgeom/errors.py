"""Exception hierarchy shared by all slrgeom modules."""


class GeometryError(Exception):
    """Base class for every error raised by slrgeom."""


class InvalidArgument(GeometryError, ValueError):
    """An input is malformed (non-finite, wrong shape, ...)."""


class DomainError(GeometryError, ValueError):
    """An input lies outside the domain of the operation (e.g. outside the model)."""


class ParameterDomainError(DomainError):
    """A tiling parameter pair violates ``p >= 3`` and ``q > 2p/(p-2)``."""

    def __init__(self, p, q, constraint):
        self.p = p
        self.q = q
        self.constraint = constraint
        super().__init__(f"invalid pair (p, q) = ({p}, {q}): {constraint}")


class UnsupportedOperation(GeometryError):
    """The operation is undefined for this object (e.g. volume of an infinite cylinder)."""


class NumericalError(GeometryError, ArithmeticError):
    """Base class for numerical failures (integration, quadrature, convergence)."""


class IntegrationError(NumericalError):
    def __init__(self, message, s):
        self.s = s
        super().__init__(f"{message} (at s = {s:.6g})")


class QuadratureError(NumericalError):
    def __init__(self, message, residual):
        self.residual = residual
        super().__init__(f"{message} (estimated error {residual:.3g})")


class ConvergenceError(NumericalError):
    def __init__(self, message, best_residual):
        self.best_residual = best_residual
        super().__init__(f"{message} (best residual {best_residual:.3g})")


class ConsistencyError(NumericalError):
    """Two independent evaluations of the same quantity disagree."""

    def __init__(self, message, first, second):
        self.first = first
        self.second = second
        super().__init__(f"{message}: {first!r} vs {second!r}")
