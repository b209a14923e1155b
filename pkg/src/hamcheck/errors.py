"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI: input/contract/structural problems are
exit 1, exhausted search budgets are exit 2.
"""

from __future__ import annotations


class HamcheckError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HamcheckError):
    """Malformed or out-of-contract user input (bad file, bad vertex id, ...)."""


class CodecError(InputError):
    """graph6 text that violates the encoding."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedSizeError(CodecError):
    """Graph too large for the short graph6 form (n > 62)."""


class StructuralError(HamcheckError):
    """The graph violates a structural precondition (bridge, acyclic vertex, ...)."""


class ContractError(HamcheckError):
    """An operation was invoked outside its contract (e.g. removing a non-removable cycle)."""


class BudgetError(HamcheckError):
    """A bounded search ran out of budget before completing."""

    def __init__(self, stage: str, limit: int, partial: int = 0):
        super().__init__(f"budget exhausted at stage '{stage}' (limit {limit}, partial {partial})")
        self.stage = stage
        self.limit = limit
        self.partial = partial


def exit_code_for(err: HamcheckError) -> int:
    if isinstance(err, BudgetError):
        return 2
    return 1
