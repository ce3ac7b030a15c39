"""Exception types shared across the package."""


class CentexError(Exception):
    """Base class for all package errors."""


class SpecFormatError(CentexError):
    """Malformed group spec, cover file or other invalid input."""


class BudgetExceeded(CentexError):
    """An enumeration would exceed the configured element budget."""

    def __init__(self, needed: int, budget: int, what: str = "group"):
        super().__init__(f"{what} needs {needed} elements, budget is {budget}")
        self.needed = needed
        self.budget = budget


class SearchBoundExceeded(CentexError):
    """A search (isomorphism, maximal subgroups) is above its supported bound."""
