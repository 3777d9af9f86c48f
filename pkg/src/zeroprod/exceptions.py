"""Exception types shared across the package."""

from __future__ import annotations


class ZeroProdError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(ZeroProdError, ValueError):
    """Operands live in different ambient spaces or over different fields."""


class BudgetExceeded(ZeroProdError):
    """An exhaustive sweep would exceed its configured budget.

    ``count`` is the number of objects the sweep would have visited.
    """

    def __init__(self, what: str, count: int, budget: int):
        self.what = what
        self.count = count
        self.budget = budget
        super().__init__(f"budget exceeded: {what} needs {count} > {budget}")


class SideError(ZeroProdError, ValueError):
    """A subspace was expected to be a one-sided ideal and is not."""


class AlgebraValidationError(ZeroProdError, ValueError):
    """Structure constants are malformed or violate the algebra axioms."""


class HypothesisFailed(ZeroProdError):
    """A gating hypothesis (prime, nonzero core, characteristic, ...) fails."""

    def __init__(self, predicate: str, detail: str = ""):
        self.predicate = predicate
        msg = f"hypothesis failed: {predicate}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
