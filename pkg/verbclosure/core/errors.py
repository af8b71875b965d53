"""
Error taxonomy.

Every library failure is a VerbClosureError subclass. The class name is the
taxonomy name shown in reports, and `exit_code` is what the CLI exits with
when the error reaches it (1 for verification/library faults, 2 for input
that could not be parsed).
"""
from typing import Optional


class VerbClosureError(Exception):
    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

    @property
    def name(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        return f"{self.name}: {self.detail}"


class VarIndexError(VerbClosureError):
    """A letter refers to a variable outside 1..n."""


class ArityMismatch(VerbClosureError):
    """Word and automorphism (or tuple) disagree on the number of variables."""


class CarrierMismatch(VerbClosureError):
    """Two operands live in different groups."""


class NotInDomain(VerbClosureError):
    """Argument outside the set where the operation is defined."""


class NotInImage(VerbClosureError):
    """Element of ℤ×D∞ outside the fibred product Φ(K)."""


class NotInSubgroup(VerbClosureError):
    """Element of G outside the index-two subgroup Φ⁻¹(Φ(K))."""


class TargetNotInK(VerbClosureError):
    """The value of a word on a G-tuple does not lie in K."""


class VerificationFailed(VerbClosureError):
    """A constructed solution failed its own re-evaluation."""


class CorpusLineError(VerbClosureError):
    """A corpus line could not be decoded or validated."""


class ParseError(VerbClosureError):
    exit_code = 2

    def __init__(self, text: str, position: int, message: str, what: Optional[str] = None):
        self.text = text
        self.position = position
        self.message = message
        label = f"cannot parse {what}" if what else "cannot parse"
        super().__init__(
            f"{label} at position {position}: {message}\n  {text}\n  {' ' * position}^"
        )
