"""Exception hierarchy shared by every ringlab module."""


class RingLabError(Exception):
    """Base class for all ringlab errors."""


class ParseError(RingLabError, ValueError):
    """Malformed ring expression or element literal.

    ``offset`` is the byte offset into the source text where parsing failed.
    """

    def __init__(self, message, text="", offset=0):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class CardinalityError(RingLabError, ValueError):
    def __init__(self, cardinality, cap):
        self.cardinality = cardinality
        self.cap = cap
        super().__init__(f"ring has {cardinality} elements, above the cap of {cap}")


class RingMismatchError(RingLabError, TypeError):
    """Arithmetic mixed elements from two different rings."""


class NotAUnitError(RingLabError, ValueError):
    pass


class SingularMatrixError(RingLabError, ZeroDivisionError):
    pass


class HypothesisViolation(RingLabError, ValueError):
    """A quadruple handed to a verifier does not satisfy bdb = bac, dbd = acd."""


class TheoremViolation(RingLabError, RuntimeError):
    """A machine check contradicted a proven statement.

    Never expected; signals an arithmetic bug and must abort loudly.
    """

    def __init__(self, message, transcript=None):
        self.transcript = transcript or {}
        super().__init__(message)


class UniquenessViolation(TheoremViolation):
    pass
