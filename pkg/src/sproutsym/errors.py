"""Exception types shared across the package."""


class PrecisionError(Exception):
    """A computation needs series coefficients beyond the stored truncation order."""


class BudgetError(Exception):
    """An enumeration or minor sweep would exceed its configured size budget."""


class ConsistencyError(Exception):
    """Two supposedly equivalent computation routes disagreed (internal bug guard)."""
