"""Exception types raised by validators and builders.

Every error carries enough context (offending indices, equation ids) to be
rendered as a JSON diagnostic by the command line front end.
"""


class DynReflError(ValueError):
    """Base class for all structural and hypothesis failures."""

    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        return {"error": self.code, "message": str(self), **self.details}


class DuplicateLabel(DynReflError):
    code = "DuplicateLabel"


class EmptyCarrier(DynReflError):
    code = "EmptyCarrier"


class UnknownLabel(DynReflError):
    code = "UnknownLabel"


class ShapeError(DynReflError):
    code = "ShapeError"


class RowNotPermutation(DynReflError):
    code = "RowNotPermutation"


class UnitLawViolated(DynReflError):
    code = "UnitLawViolated"


class NotAssociative(DynReflError):
    code = "NotAssociative"


class NoUnit(DynReflError):
    code = "NoUnit"


class NoInverse(DynReflError):
    code = "NoInverse"


class NotABijection(DynReflError):
    code = "NotABijection"


class SizeMismatch(DynReflError):
    code = "SizeMismatch"


class CapExceeded(DynReflError):
    code = "CapExceeded"


class MismatchedH(DynReflError):
    code = "MismatchedH"


class TypeMismatch(DynReflError):
    code = "TypeMismatch"


class NotAMorphism(DynReflError):
    code = "NotAMorphism"


class CarrierTooLarge(DynReflError):
    code = "CarrierTooLarge"


class ActionNotDivisible(DynReflError):
    code = "ActionNotDivisible"


class HypothesisViolated(DynReflError):
    code = "HypothesisViolated"


class AxiomViolated(DynReflError):
    code = "AxiomViolated"


class NotAHomomorphism(DynReflError):
    code = "NotAHomomorphism"


class InverseNeedsAbelian(DynReflError):
    code = "InverseNeedsAbelian"


class NotABrace(DynReflError):
    code = "NotABrace"


class SchemaError(DynReflError):
    code = "SchemaError"
