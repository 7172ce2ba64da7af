"""Exception hierarchy shared by all modules."""


class NCJordanError(Exception):
    """Base class for every error raised by this package."""


class FieldError(NCJordanError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class FieldMismatch(FieldError, TypeError):
    pass


class PoleAtPoint(FieldError, ZeroDivisionError):
    pass


class UnboundVariable(FieldError, KeyError):
    pass


class AlgebraMismatch(NCJordanError, ValueError):
    pass


class NonHomogeneous(NCJordanError, ValueError):
    pass


class CharacteristicTwo(NCJordanError, ValueError):
    pass


class NotSupercommutative(NCJordanError, ValueError):
    pass


class GradingViolation(NCJordanError, ValueError):
    pass


class FormDegenerate(NCJordanError, ValueError):
    pass


class FormNotSupersymmetric(NCJordanError, ValueError):
    pass


class StarNotCompatible(NCJordanError, ValueError):
    pass


class StarNotAnticommutative(NCJordanError, ValueError):
    pass


class AOdd(NCJordanError, ValueError):
    pass


class BracketNotPoisson(NCJordanError, ValueError):
    pass


class NotDerivation(NCJordanError, ValueError):
    pass


class NotPoissonDerivation(NCJordanError, ValueError):
    pass


class WrongDimension(NCJordanError, ValueError):
    pass


class ParityViolation(NCJordanError, ValueError):
    pass


class UnknownFamily(NCJordanError, KeyError):
    pass


class SearchTooLarge(NCJordanError, RuntimeError):
    pass


class SizeMismatch(NCJordanError, ValueError):
    pass


class InconsistentResult(NCJordanError, RuntimeError):
    """Two independent computations that must agree did not."""
