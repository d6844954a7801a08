"""Shared exception types."""


class BudgetError(RuntimeError):
    """An operation would exceed its enumeration budget.

    Carries the best result that *was* achievable, if any.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
