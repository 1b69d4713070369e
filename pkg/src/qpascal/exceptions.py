"""Exception types raised by qpascal."""


class QPascalError(Exception):
    """Base class for all library errors."""


class InvalidBase(QPascalError, ValueError):
    """The base is not a prime >= 2."""


class DomainError(QPascalError, ValueError):
    """An argument lies outside the domain of the operation (e.g. k > n)."""


class ValuationOfZero(QPascalError, ArithmeticError):
    """The p-adic valuation of 0 is infinite and not representable as an int."""


class DegenerateAllWhite(UserWarning):
    """p divides m*n, so every scaled probability vanishes mod p.

    This is a signal, not a failure: the image is still produced (all white).
    """
