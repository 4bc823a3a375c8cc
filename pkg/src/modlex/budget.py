"""Search budgets: state counters and wall-clock deadlines.

Every potentially exponential search in the library accepts an optional
Budget. Exhausting it raises BudgetExceededError; the caller is expected
to report "indeterminate" rather than coerce the failure into a boolean.
"""

from __future__ import annotations

import time

from .errors import BudgetExceededError


class Budget:
    """A consumable allowance of search states and (optionally) time.

    `max_states` bounds how many search nodes may be expanded;
    `time_ms` bounds wall-clock time from construction. Either may be
    None for "unlimited".
    """

    __slots__ = ("max_states", "states", "deadline")

    def __init__(self, max_states: int | None = None, time_ms: float | None = None):
        self.max_states = max_states
        self.states = 0
        self.deadline = None if time_ms is None else time.monotonic() + time_ms / 1000.0

    def spend(self, amount: int = 1) -> None:
        """Consume `amount` states, raising once the budget is gone."""
        self.states += amount
        if self.max_states is not None and self.states > self.max_states:
            raise BudgetExceededError(
                f"state budget exhausted ({self.states} > {self.max_states})"
            )
        # Checking the clock on every spend would dominate small searches.
        if self.deadline is not None and self.states % 256 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceededError("time budget exhausted")

    def check_time(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceededError("time budget exhausted")


def ensure_budget(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget()
