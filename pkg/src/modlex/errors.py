"""Exception types shared across the package."""


class ModlexError(Exception):
    """Base class for all library errors."""


class PreconditionError(ModlexError, ValueError):
    """An operation was called on input that violates its contract."""


class BudgetExceededError(ModlexError):
    """A search ran out of its state or time budget.

    Deciders raise this instead of guessing: a budget overrun means
    *indeterminate*, never a wrong boolean.
    """


class CertificateError(ModlexError):
    """A produced certificate failed its own re-verification.

    This is a hard internal error: constructors must never hand out a
    witness that does not check out.
    """


class EdgeListParseError(ModlexError, ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
