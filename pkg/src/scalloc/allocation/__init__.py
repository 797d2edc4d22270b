"""Optimal and user-capped SC power allocation."""

__all__ = [
    "AllocationProblem",
    "ConstrainedResult",
    "PurgeDiagnostics",
    "allocate",
    "allocate_two_user",
    "allocate_with_diagnostics",
    "assign_powers",
    "crossing_point",
    "exhaustive_allocate",
    "greedy_allocate",
    "greedy_gap",
    "nu_tau",
    "purge_beta_tau",
    "purge_crossing",
    "purge_nu",
    "two_user_region",
]

from .constrained import (
    ConstrainedResult,
    exhaustive_allocate,
    greedy_allocate,
    greedy_gap,
)
from .problem import AllocationProblem, PurgeDiagnostics
from .purging import crossing_point, nu_tau, purge_beta_tau, purge_crossing, purge_nu
from .sc_allocator import allocate, allocate_with_diagnostics, assign_powers
from .two_user import allocate_two_user, two_user_region
