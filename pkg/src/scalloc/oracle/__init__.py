"""Independent reference solvers used to check the SC allocator."""

__all__ = [
    "KKTResiduals",
    "OracleSolution",
    "check_separable_identity",
    "cumulative_dp_maximize",
    "kkt_residuals",
    "simplex_grid_maximize",
]

from .cumulative_dp import (
    OracleSolution,
    check_separable_identity,
    cumulative_dp_maximize,
)
from .kkt import KKTResiduals, kkt_residuals
from .simplex_grid import simplex_grid_maximize
