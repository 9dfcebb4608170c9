"""Exception hierarchy shared by all numerical modules."""


class LerchStokesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LerchStokesError):
    """Input outside the documented domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class ConvergenceError(LerchStokesError):
    """An iterative scheme (quadrature, series tail) failed to converge."""


class TailError(LerchStokesError):
    """The truncation schedule is too short for the requested accuracy."""


class PrecisionError(LerchStokesError):
    """Catastrophic cancellation detected: the working precision is too low
    for the result to carry any trustworthy digits."""
