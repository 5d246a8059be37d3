"""Exception hierarchy shared by every module in the package."""


class KrullError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(KrullError, ValueError):
    """Text does not conform to the element, polynomial or ideal grammar."""


class DomainError(KrullError, ValueError):
    """A value is well formed but does not belong to the requested ring."""


class RingMismatchError(KrullError, TypeError):
    pass


class DivisionByZeroError(KrullError, ZeroDivisionError):
    pass


class BothZeroError(KrullError, ValueError):
    pass


class ZeroElementError(KrullError, ValueError):
    pass


class ZeroPolynomialError(KrullError, ValueError):
    pass


class ConstantPolynomialError(KrullError, ValueError):
    pass


class NotIrreducibleError(KrullError, ValueError):
    pass


class NotPrimitiveError(KrullError, ValueError):
    pass


class CapacityError(KrullError):
    """A brute-force search would exceed the configured size guard."""


class InfiniteResidueFieldError(KrullError):
    pass


class UnsupportedShapeError(KrullError, ValueError):
    """Ideal generators outside the ``(g)`` / ``(p, g)`` shapes."""


class NotProperError(KrullError, ValueError):
    pass


class NotPrimeIdealError(KrullError, ValueError):
    pass


class NoIrreduciblesError(KrullError):
    pass
