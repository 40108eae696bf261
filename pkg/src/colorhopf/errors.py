"""Exception types shared by every module."""


class ColorHopfError(Exception):
    pass


class FieldMismatch(ColorHopfError):
    pass


class DivisionByZero(ColorHopfError, ZeroDivisionError):
    pass


class LengthMismatch(ColorHopfError):
    pass


class GroupMismatch(ColorHopfError):
    pass


class DimensionMismatch(ColorHopfError):
    pass


class AmbientMismatch(ColorHopfError):
    pass


class NotGraded(ColorHopfError):
    pass


class InvalidCommutationFactor(ColorHopfError):
    pass


class ValueUnavailable(ColorHopfError):
    pass


class NotVerified(ColorHopfError):
    """Raised when a categorical operation receives a structure that fails its axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotParallel(ColorHopfError):
    pass


class NotCocommutative(ColorHopfError):
    pass


class NotSubalgebra(ColorHopfError):
    pass


class NotHopfIdeal(ColorHopfError):
    pass


class NotModuleCoalgebra(ColorHopfError):
    pass


class DoesNotCommute(ColorHopfError):
    pass


class UniversalityFailure(ColorHopfError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GradingIncompatible(ColorHopfError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotOddDegree(ColorHopfError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CrossCheckFailure(ColorHopfError):
    pass
