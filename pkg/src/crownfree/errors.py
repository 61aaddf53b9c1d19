"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Any, Optional


class CrownFreeError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(CrownFreeError, ValueError):
    """Malformed graph6 / DIMACS input.

    ``offset`` is the byte offset inside the offending line, ``line`` the
    1-based line number when the error came from a file.
    """

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.message = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(message + suffix)


class UnsupportedSize(CrownFreeError, ValueError):
    pass


class OutOfRange(CrownFreeError, IndexError):
    pass


class EmptyBase(CrownFreeError, ValueError):
    pass


class OverlappingSets(CrownFreeError, ValueError):
    pass


class UnknownPattern(CrownFreeError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown pattern"


class WitnessError(CrownFreeError):
    """Error that carries a concrete witness (embedding, hole, ...)."""

    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class NotInClass(WitnessError):
    pass


class NotPerfect(WitnessError):
    pass


class Disconnected(CrownFreeError, ValueError):
    pass


class InvalidEmbedding(CrownFreeError, ValueError):
    pass


class InvalidWitness(CrownFreeError, ValueError):
    pass


class PreconditionUnmet(CrownFreeError, ValueError):
    """A hypothesis of a structural check does not hold; ``hypothesis`` names it."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)
