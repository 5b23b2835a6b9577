"""
Exception hierarchy shared by every package.

Validation problems that are expected (a malformed interpretation, a failed
law) are reported as data by the operations that detect them. The classes
below cover the cases where an operation cannot produce a result at all.
"""
from __future__ import annotations

from typing import Iterable, Optional


class DLGamesError(Exception):
    """Base class for all errors raised by this project."""


class UnknownNameError(DLGamesError, KeyError):
    """A concept, role or individual name is not in the vocabulary."""

    def __init__(self, kind: str, name: str):
        self.kind = kind
        self.name = name
        super().__init__(f"unknown {kind} name: {name}")

    def __str__(self) -> str:
        return self.args[0]


class UnknownElementError(DLGamesError, KeyError):
    def __init__(self, element: str):
        self.element = element
        super().__init__(f"unknown element: {element}")

    def __str__(self) -> str:
        return self.args[0]


class UndefinedIndividualError(DLGamesError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"individual {name} is not mapped to an element")


class VocabularyMismatchError(DLGamesError):
    pass


class InvalidInterpretationError(DLGamesError):
    def __init__(self, violations: Iterable[str]):
        self.violations = list(violations)
        super().__init__("invalid interpretation: " + "; ".join(self.violations))


class InterpretationFileError(DLGamesError):
    """An interpretation file could not be read or failed its schema."""

    def __init__(self, path: str, field: str, message: str):
        self.path = path
        self.field = field
        super().__init__(f"{path}: field '{field}': {message}")


class ConceptSyntaxError(DLGamesError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class GrammarViolationError(ConceptSyntaxError):
    """Parsed text is well-formed but outside the grammar (e.g. inverse of a compound role)."""


class EmptyVocabularyError(DLGamesError):
    pass


class PreconditionError(DLGamesError):
    pass


class IllegalMoveError(DLGamesError):
    def __init__(self, message: str, index: Optional[int] = None):
        self.index = index
        prefix = f"move {index}: " if index is not None else ""
        super().__init__(prefix + message)


class FreshNameCollisionError(DLGamesError):
    pass


class UnreachableNominalError(DLGamesError):
    pass


class UnmappedIndividualError(DLGamesError):
    pass


class InvalidMorphismError(DLGamesError):
    pass


class InvalidCoKleisliError(DLGamesError):
    pass


class CrossInstanceError(DLGamesError):
    pass


class UnboundedDepthError(DLGamesError):
    pass
