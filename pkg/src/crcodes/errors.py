"""Exception hierarchy shared by every module."""


class CRCodesError(Exception):
    """Base class for all library errors."""


class NonPrimeP(CRCodesError, ValueError):
    pass


class FieldTooLarge(CRCodesError, ValueError):
    pass


class InvOfZero(CRCodesError, ZeroDivisionError):
    pass


class ColumnMismatch(CRCodesError, ValueError):
    pass


class LengthMismatch(CRCodesError, ValueError):
    pass


class EmptyCode(CRCodesError, ValueError):
    pass


class TooLarge(CRCodesError):
    """An enumeration would exceed the configured budget."""


class NonIntegerOutput(CRCodesError, ArithmeticError):
    pass


class NotQuasiPerfect(CRCodesError, ValueError):
    pass


class NotCyclic(CRCodesError, ValueError):
    pass


class BadC(CRCodesError, ValueError):
    pass


class UnknownId(CRCodesError, KeyError):
    pass


class BadShape(CRCodesError, ValueError):
    pass


class OutOfRange(CRCodesError, ValueError):
    pass


class MixedWeights(CRCodesError, ValueError):
    pass


class NotIntegral(CRCodesError, ArithmeticError):
    pass


class NotExtensionPair(CRCodesError, ValueError):
    pass
