"""Exception hierarchy shared by every module."""


class HirzcodesError(Exception):
    """Base class for all library errors."""


class NotPrime(HirzcodesError):
    pass


class FieldTooLarge(HirzcodesError):
    pass


class DivisionByZero(HirzcodesError):
    pass


class ZeroToNegativePower(HirzcodesError):
    pass


class DimensionMismatch(HirzcodesError):
    pass


class IndexOutOfRange(HirzcodesError):
    pass


class ZeroCode(HirzcodesError):
    pass


class BudgetExceeded(HirzcodesError):
    pass


class NotNested(HirzcodesError):
    pass


class NegativeA(HirzcodesError):
    pass


class HypothesisViolated(HirzcodesError):
    pass


class NoMultiplier(HirzcodesError):
    pass


class ZeroCoordinate(HirzcodesError):
    pass
