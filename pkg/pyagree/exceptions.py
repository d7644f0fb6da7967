"""
Provides the exceptions raised throughout the package.

Most input validation simply raises :py:class:`ValueError` or
:py:class:`TypeError`. The classes below mark the failure modes that
callers (in particular the command line interface) need to tell apart.
"""

class PyAgreeError(Exception):
    """
    Base class for all package specific errors.
    """
    pass

class ZeroProbabilityError(PyAgreeError, ValueError):
    """
    Raised when conditioning on an event of zero probability.
    """
    pass

class InfiniteDivergenceError(PyAgreeError, ValueError):
    """
    Raised when a divergence or an expected payment is infinite, i.e.
    some outcome with positive weight has zero reference probability.
    """
    pass

class ConvergenceError(PyAgreeError, RuntimeError):
    """
    Raised when a scalar solver does not converge within its
    iteration budget.
    """
    pass

class InvariantViolation(PyAgreeError, AssertionError):
    """
    Raised when a runtime invariant of a simulation does not hold.
    """
    pass

class ConfigError(PyAgreeError, ValueError):
    """
    Raised for malformed or inconsistent experiment configurations.
    """
    pass
