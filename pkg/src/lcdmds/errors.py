"""Exception hierarchy with stable machine-readable error codes."""


class LcdmdsError(Exception):
    """Base class; ``code`` is stable and safe to match on."""

    code = "ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class NonPrime(LcdmdsError):
    code = "NON_PRIME"


class CapExceeded(LcdmdsError):
    code = "CAP_EXCEEDED"


class FieldDivisionError(LcdmdsError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO"


class NotASquareField(LcdmdsError):
    code = "NOT_A_SQUARE_FIELD"


class NotADivisor(LcdmdsError):
    code = "NOT_A_DIVISOR"


class DimensionMismatch(LcdmdsError):
    code = "DIMENSION_MISMATCH"


class NotSquare(LcdmdsError):
    code = "NOT_SQUARE"


class RankDeficient(LcdmdsError):
    code = "RANK_DEFICIENT"


class DuplicatePoints(LcdmdsError):
    code = "DUPLICATE_POINTS"


class ZeroMultiplier(LcdmdsError):
    code = "ZERO_MULTIPLIER"


class ZeroScalar(LcdmdsError):
    code = "ZERO_SCALAR"


class NoScalarFound(LcdmdsError):
    code = "NO_SCALAR_FOUND"


class NotSelfOrthogonal(LcdmdsError):
    code = "NOT_SELF_ORTHOGONAL"


class BadScalar(LcdmdsError):
    code = "BAD_SCALAR"


class UnsupportedParams(LcdmdsError):
    code = "UNSUPPORTED_PARAMS"


class ValidationFailed(LcdmdsError):
    """A construction produced a code that failed its own post-checks."""

    code = "VALIDATION_FAILED"


class NotFound(LcdmdsError):
    """A bounded search ended without a hit.

    ``certificate`` describes the searched space (complete exhaustion or
    budget exhaustion).
    """

    code = "NOT_FOUND"

    def __init__(self, message: str = "", certificate=None):
        super().__init__(message)
        self.certificate = certificate


class Nonexistent(LcdmdsError):
    """No code with the requested parameters exists; proof by enumeration."""

    code = "NONEXISTENT"

    def __init__(self, message: str = "", certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NotCovered(LcdmdsError):
    """Parameters outside the range any implemented construction covers."""

    code = "NOT_COVERED"


class FormatError(LcdmdsError):
    code = "FORMAT"
