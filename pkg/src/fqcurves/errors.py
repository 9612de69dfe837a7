"""Exception types raised across the package."""


class FqcError(Exception):
    """Base class for all package errors."""


class NonPrime(FqcError, ValueError):
    pass


class ReducibleModulus(FqcError, ValueError):
    pass


class NoDefaultModulus(FqcError, KeyError):
    pass


class DivisionByZero(FqcError, ZeroDivisionError):
    pass


class FieldMismatch(FqcError, ValueError):
    pass


class ArityMismatch(FqcError, ValueError):
    pass


class RingMismatch(FqcError, ValueError):
    pass


class DegeneratePoints(FqcError, ValueError):
    pass


class NotLinear(FqcError, ValueError):
    pass


class NotHomogeneous(FqcError, ValueError):
    pass


class DimensionMismatch(FqcError, ValueError):
    pass


class BadK(FqcError, ValueError):
    pass


class LocusMismatch(FqcError, ValueError):
    pass


class HasLineComponent(FqcError, ValueError):
    pass


class BudgetExceeded(FqcError, RuntimeError):
    pass


class BadDegreeRange(FqcError, ValueError):
    pass


class AlphasNotDistinct(FqcError, ValueError):
    pass


class BadMultiplicities(FqcError, ValueError):
    pass


class ReducibleQuadratic(FqcError, ValueError):
    pass


class BadPartition(FqcError, ValueError):
    pass


class ParseError(FqcError, ValueError):
    pass
