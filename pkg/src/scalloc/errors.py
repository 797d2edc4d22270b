"""Exceptions raised by scalloc.

All of them derive from `ValueError`, so callers that only care about invalid input
can catch that.
"""


class ContractViolationError(ValueError):
    """Raised when an input breaks the precondition of an operation.

    Examples are length mismatches between SNR and weight vectors, an SNR vector that
    should be sorted but is not, or powers that do not lie on the unit simplex.
    """


class NoCrossingError(ContractViolationError):
    """Raised when two users have no crossing point (zero denominator)."""


class EnumerationBudgetError(ValueError):
    """Raised when an exhaustive subset search would exceed its budget."""


class OracleGuardError(ValueError):
    """Raised when a brute-force oracle is asked for an intractable grid."""
