"""Exception hierarchy shared by all qcpart modules."""

from __future__ import annotations


class QCPartError(Exception):
    """Base class for every error raised by qcpart."""


class InvalidArgumentError(QCPartError, ValueError):
    """An argument violates a documented precondition."""


class SizeLimitError(InvalidArgumentError):
    """Input is too large for an exhaustive routine."""


class UndefinedImprovementError(InvalidArgumentError):
    """Improvement over a zero baseline with a non-zero proposed cost."""


class ParseError(QCPartError, ValueError):
    """Malformed circuit document.

    Carries a 1-based ``line`` for line-oriented formats or a ``path``
    (``$.gates[3].operands``) for JSON documents.
    """

    def __init__(self, message: str, *, line: int | None = None, path: str | None = None):
        self.message = message
        self.line = line
        self.path = path
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif path is not None:
            where = f"{path}: "
        super().__init__(where + message)


class UnsupportedGateError(ParseError):
    """Gate token is recognised but acts on more qubits than the model allows."""

    def __init__(self, token: str, message: str, *, line: int | None = None):
        self.token = token
        super().__init__(message, line=line)
