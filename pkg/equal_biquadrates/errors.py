"""Exceptions raised for invalid input and failed checks."""


class BiquadrateError(ValueError):
    """Base class of every error raised for user-controlled input."""


class ZeroDenominatorError(BiquadrateError, ZeroDivisionError):
    """A rational number was requested with a zero denominator."""


class EmptyInputError(BiquadrateError):
    """An operation that needs at least one value received none."""


class InvalidInputError(BiquadrateError):
    """Input values or records are malformed or inconsistent."""


class InvalidSpecError(BiquadrateError):
    """An equation specification breaks one of its invariants."""


class DegenerateParamsError(BiquadrateError):
    """The chosen parameters make the leading cubic coefficient vanish."""


class SingularCurveError(BiquadrateError):
    """The cubic has zero discriminant and therefore no group law."""


class NotOnCurveError(BiquadrateError):
    """A point does not satisfy the curve equation."""


class PointAtInfinityError(BiquadrateError):
    """The point at infinity has no affine coordinates to substitute."""


class NonIntegralModelError(BiquadrateError):
    """An operation needs integer curve coefficients."""


class NoGeneratorFoundError(BiquadrateError):
    """Point search found no candidate of infinite order."""


class VerificationError(BiquadrateError):
    """A derived identity failed exact re-verification."""
