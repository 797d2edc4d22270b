"""Seven-user instance with a hand-checked solution."""

from dataclasses import dataclass
from typing import List

import numpy as np

from ..allocation import PurgeDiagnostics, allocate_with_diagnostics
from ..model import ChannelState, PowerAllocation, WeightVector

EXAMPLE_SNR = (1.7, 3.3, 4.4, 6.7, 7.7, 8.3, 8.6)
EXAMPLE_WEIGHTS = (6.0, 29.7, 26.5, 15.4, 4.6, 17.6, 12.2)

EXPECTED_AFTER_BETA_TAU = (1, 2, 5, 6)
EXPECTED_AFTER_NU = (1, 2, 5)
EXPECTED_ACTIVE = (1, 2, 5)
EXPECTED_NU = (10.2, 98.0, 116.6, 103.2, 35.4, 146.1, 104.9)
EXPECTED_TAU = (3.8, 22.8, 21.6, 13.4, 4.1, 15.7, 10.9)
VALUE_TOL = 0.05
"""`nu` and `tau` are known to one decimal."""

EXPECTED_CROSSINGS = (0.40, 0.09)
CROSSING_TOL = 0.005

EXPECTED_POWERS = {1: 0.5999, 2: 0.3094, 5: 0.0907}
"""Powers of the active users, to three decimals of tolerance."""


@dataclass(frozen=True, eq=False)
class WorkedExample:
    """
    Solution of the seven-user instance.

    Attributes
    ----------
    state : ChannelState
        SNRs, already sorted.
    weights : WeightVector
        Weights.
    alloc : PowerAllocation
        Optimal allocation.
    diagnostics : PurgeDiagnostics
        Intermediate results.
    """

    state: ChannelState
    weights: WeightVector
    alloc: PowerAllocation
    diagnostics: PurgeDiagnostics

    def matches_expected(self, tolerance: float = 1e-3) -> bool:
        """
        Whether the solution matches the hand-checked one.

        Parameters
        ----------
        tolerance : float, optional
            Tolerance on the powers, by default 1e-3.

        Returns
        -------
        bool
            True if `nu`, `tau`, the surviving sets, the crossings and the powers
            match.
        """
        diagnostics = self.diagnostics
        crossings = np.asarray(diagnostics.crossings)
        values_match = np.allclose(
            diagnostics.nu, EXPECTED_NU, rtol=0, atol=VALUE_TOL
        ) and np.allclose(diagnostics.tau, EXPECTED_TAU, rtol=0, atol=VALUE_TOL)
        crossings_match = crossings.shape == (len(EXPECTED_CROSSINGS),) and np.allclose(
            crossings, EXPECTED_CROSSINGS, rtol=0, atol=CROSSING_TOL
        )
        return (
            diagnostics.after_beta_tau == EXPECTED_AFTER_BETA_TAU
            and diagnostics.after_nu == EXPECTED_AFTER_NU
            and diagnostics.after_crossing == EXPECTED_ACTIVE
            and self.alloc.active == EXPECTED_ACTIVE
            and bool(values_match)
            and bool(crossings_match)
            and all(
                abs(self.alloc.p[user] - power) <= tolerance
                for user, power in EXPECTED_POWERS.items()
            )
        )

    def describe(self) -> List[str]:
        """
        Human readable lines, users numbered from 1.

        Returns
        -------
        list of str
            Description of every step.
        """

        def one_based(users: tuple) -> str:
            return "{" + ", ".join(str(u + 1) for u in users) + "}"

        diagnostics = self.diagnostics
        lines = [
            "snr   : " + " ".join(f"{g:7.2f}" for g in self.state.snr),
            "beta  : " + " ".join(f"{b:7.2f}" for b in self.weights.beta),
            "nu    : " + " ".join(f"{v:7.2f}" for v in diagnostics.nu),
            "tau   : " + " ".join(f"{v:7.2f}" for v in diagnostics.tau),
            f"after weight/tau pass : {one_based(diagnostics.after_beta_tau)}",
            f"after nu pass         : {one_based(diagnostics.after_nu)}",
            f"after crossing pass   : {one_based(diagnostics.after_crossing)}",
            "crossings             : "
            + ", ".join(f"{c:.4f}" for c in diagnostics.crossings),
        ]
        lines += [
            f"p_{user + 1} = {self.alloc.p[user]:.4f}"
            for user in np.flatnonzero(self.alloc.p)
        ]
        return lines


def run_worked_example() -> WorkedExample:
    """
    Solve the seven-user instance.

    Returns
    -------
    WorkedExample
        Solution with diagnostics.

    Examples
    --------
    >>> from scalloc.experiment import run_worked_example
    >>> example = run_worked_example()
    >>> example.alloc.active
    (1, 2, 5)
    >>> example.matches_expected()
    True
    """
    state = ChannelState(EXAMPLE_SNR)
    weights = WeightVector(EXAMPLE_WEIGHTS)
    alloc, diagnostics = allocate_with_diagnostics(state, weights)
    return WorkedExample(
        state=state, weights=weights, alloc=alloc, diagnostics=diagnostics
    )
