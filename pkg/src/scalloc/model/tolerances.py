"""Numerical tolerances shared across the package."""

SIMPLEX_TOL = 1e-12
"""Allowed deviation of the total power from 1."""

COMPARISON_TOL = 1e-9
"""Relative slack when comparing objectives of different allocations."""

IMPROVEMENT_TOL = 1e-12
"""Relative improvement required for the greedy allocator to add a user."""
