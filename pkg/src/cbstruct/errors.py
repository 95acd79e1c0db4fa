"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CBStructError(Exception):
    """Base class for all errors raised by cbstruct."""


class InvalidInput(CBStructError, ValueError):
    """The arguments violate an operation's precondition."""


class IndexOutOfRange(InvalidInput, IndexError):
    pass


class SelfLoop(InvalidInput):
    pass


class MalformedGraph6(InvalidInput):
    """A graph6 line could not be decoded.

    ``offset`` is the byte offset of the first offending character; for a
    truncated line it equals the line length.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SizeMismatch(InvalidInput):
    pass


class ZeroBag(InvalidInput):
    pass


class InvalidPartition(InvalidInput):
    pass


class Disconnected(InvalidInput):
    pass


class EmptyGraph(InvalidInput):
    pass


class NotTriangleFree(InvalidInput):
    pass


class TooLarge(InvalidInput):
    pass


class NotAnEdge(InvalidInput):
    pass


class PreconditionFailed(InvalidInput):
    """A lemma checker's hypothesis does not hold for the given instance.

    ``hypothesis`` names the failed hypothesis so that acceptance statistics
    can tell a vacuous instance apart from a checked one.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        msg = f"hypothesis failed: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.hypothesis = hypothesis


class InvalidCycle(PreconditionFailed):
    def __init__(self, detail: str):
        super().__init__("induced cycle", detail)


class BadConfig(InvalidInput):
    pass


class GaveUp(CBStructError):
    """A bounded resampling loop ran out of attempts."""


class SchemaError(InvalidInput):
    def __init__(self, message: str, index: int | None = None):
        if index is not None:
            message = f"record {index}: {message}"
        super().__init__(message)
        self.index = index


class TheoremViolation(CBStructError):
    """The classifier found a connected graph in none of the three classes
    that also has no induced claw or bull. Must never fire."""
