"""Exception hierarchy shared by every module."""


class SphereGreenError(Exception):
    """Base class for all library errors."""


class DomainError(SphereGreenError, ValueError):
    """An argument lies outside the domain of the requested function."""


class SingularityError(DomainError):
    """Evaluation at (or inside the guard band of) a kernel singularity."""


class RepresentationError(SphereGreenError, ValueError):
    """The chosen series representation has a pole for these parameters."""


class ConvergenceError(SphereGreenError, ArithmeticError):
    """A series or quadrature did not reach the requested tolerance."""


class ArgumentError(SphereGreenError, ValueError):
    """Mismatched arguments, e.g. points of different dimension or radius."""
