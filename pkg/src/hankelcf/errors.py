"""Exception types raised by the library."""


class HankelCFError(Exception):
    pass


class ExactArithmeticError(HankelCFError, ArithmeticError):
    """An exact operation that must not leave a remainder did."""


class NonInvertibleConstantTerm(HankelCFError, ArithmeticError):
    pass


class NonInvertibleDenominator(HankelCFError, ArithmeticError):
    pass


class UnknownSeriesName(HankelCFError, KeyError):
    pass


class ShiftBeyondOrder(HankelCFError, ValueError):
    pass


class DepthInsufficient(HankelCFError):
    pass


class InsufficientLevels(HankelCFError, ValueError):
    pass


class DivisionFails(HankelCFError, ArithmeticError):
    pass


class AlphaDegenerate(HankelCFError, ValueError):
    pass


class ZeroFactor(HankelCFError, ValueError):
    pass


class NotAnHFraction(HankelCFError, ValueError):
    pass


class InsufficientCoefficients(HankelCFError, ValueError):
    pass


class NotAPermutation(HankelCFError, ValueError):
    pass


class BoundExceeded(HankelCFError, ValueError):
    pass


class UnknownId(HankelCFError, KeyError):
    pass
