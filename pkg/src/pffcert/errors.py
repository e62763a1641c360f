"""Exception types shared across the package."""


class PffcertError(Exception):
    """Base class for package errors."""


class FactorTimeout(PffcertError):
    """A cofactor resisted the configured factoring effort budget."""


class NotPrime(PffcertError):
    """A prime was required."""


class NotIrreducible(PffcertError):
    """A polynomial required to be irreducible is not."""


class WrongDegree(PffcertError):
    """A polynomial has the wrong degree for the requested operation."""


class DivisionByZero(PffcertError, ZeroDivisionError):
    """Field inversion of zero."""


class ZeroElement(PffcertError):
    """The zero element is outside the domain of a multiplicative test."""


class NotADivisor(PffcertError):
    """Expected a divisor of x^n - 1 (or of q^n - 1)."""


class BudgetExceeded(PffcertError):
    """An enumeration budget would be exceeded."""


class NonPositiveDelta(PffcertError):
    """A sieve decomposition has delta <= 0 and is unusable."""


class DenominatorNonPositive(PffcertError):
    """The main inequality's denominator is not positive for these parameters."""
