"""Exception types raised across the package."""


class BohrError(Exception):
    """Base class for all errors raised by bohrradius."""


class DomainError(BohrError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class ToleranceUnreachable(BohrError, ArithmeticError):
    """The requested accuracy cannot be certified within the term cap."""


class AdmissibilityError(BohrError, ValueError):
    """A class parameter violates the admissibility condition of its radius equation."""


class SignCheckError(BohrError, ValueError):
    """The endpoints of a radius equation do not straddle zero."""


class ConvergenceError(BohrError, ArithmeticError):
    """An iterative method exhausted its iteration budget."""
