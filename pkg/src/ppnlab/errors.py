"""Exception hierarchy shared by all ppnlab modules."""


class PPNLabError(Exception):
    """Base class for every error raised on purpose by this package."""


class NotPrime(PPNLabError):
    pass


class Reducible(PPNLabError):
    """A supplied modulus polynomial factors over F_p."""


class SizeLimit(PPNLabError):
    """The requested computation exceeds a configured size bound."""


class NotADivisor(PPNLabError):
    pass


class DivisionByZero(PPNLabError):
    pass


class ZeroInput(PPNLabError):
    pass


class EvenCharacteristic(PPNLabError):
    pass


class BadExponent(PPNLabError):
    pass


class DomainMismatch(PPNLabError):
    pass


class NotPermutation(PPNLabError):
    pass


class NotOrthomorphism(PPNLabError):
    """Permutation whose shifted map f(x) - x is not a permutation."""


class BadC(PPNLabError):
    pass


class BadTwist(PPNLabError):
    pass


class Singular(PPNLabError):
    pass


class ShiftSingular(PPNLabError):
    pass


class BadParams(PPNLabError):
    pass


class NotQuadratic(PPNLabError):
    pass


class NotLinearOrtho(PPNLabError):
    """Orthomorphism unsuitable for the paired-block construction."""


class ParamMismatch(PPNLabError):
    """Claimed design parameters are arithmetically inconsistent."""


class NotCoprime(PPNLabError):
    pass


class NonPositive(PPNLabError):
    pass


class UsageError(PPNLabError):
    """Bad command-line or config input (CLI exit code 64)."""
