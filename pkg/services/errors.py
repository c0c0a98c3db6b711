from typing import Optional


class HilbertError(Exception):
    """Base class for every library failure.

    ``code`` is a stable machine-readable identifier; the CLI puts it in the
    JSON error payload it writes to stderr.
    """

    code = "hilbert-error"

    def __init__(self, detail: str, code: Optional[str] = None):
        super().__init__(detail)
        self.detail = detail
        if code is not None:
            self.code = code


class NotDivisible(HilbertError):
    code = "not-divisible"


class TruncationError(HilbertError):
    code = "truncated"


class EmptySequence(HilbertError):
    code = "empty-sequence"


class ShapeUnavailable(HilbertError):
    code = "shape-unavailable"


class InvalidSPoly(HilbertError):
    code = "invalid-s-poly"


class NotInImage(HilbertError):
    code = "not-in-image"


class InsufficientTruncation(HilbertError):
    code = "insufficient-truncation"


class KindMismatch(HilbertError):
    code = "kind-mismatch"


class PointNotInSupport(HilbertError):
    code = "point-not-in-support"


class DegreeTooLarge(HilbertError):
    code = "degree-too-large"


class CapExceeded(HilbertError):
    code = "cap-exceeded"


class InvalidEpsilon(HilbertError):
    code = "invalid-epsilon"
