"""Exception types shared across the package."""


class GridCodesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GridCodesError):
    """Invalid input: out-of-grid point, malformed spec, undefined quantity."""


class BudgetError(GridCodesError):
    """An exhaustive computation would exceed the configured enumeration budget."""
