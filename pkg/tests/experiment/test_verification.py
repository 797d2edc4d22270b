from dataclasses import replace

import pytest

from scalloc.allocation import AllocationProblem, allocate_with_diagnostics
from scalloc.errors import ContractViolationError
from scalloc.experiment import verify
from scalloc.experiment.verification import _purge_failures


def test_verify_small_run():
    report = verify(n_instances=30, l_min=2, l_max=6, seed=4)
    assert report.passed, report.failures
    assert report.worked_example_ok
    assert report.max_relative_gap <= 1e-6
    assert report.max_kkt_residual <= 1e-5
    assert report.max_two_user_deviation <= 1e-12


def test_verify_invalid_range():
    with pytest.raises(ContractViolationError):
        verify(n_instances=1, l_min=4, l_max=3)


def test_purge_failures_worked_example(worked_example_inputs):
    problem = AllocationProblem.from_inputs(*worked_example_inputs)
    _, diagnostics = allocate_with_diagnostics(*worked_example_inputs)
    assert _purge_failures(problem, diagnostics) == []


@pytest.mark.parametrize(
    "change, message",
    [
        (lambda d: {"after_crossing": d.after_crossing + (0,)}, "not nested"),
        (lambda d: {"after_nu": tuple(reversed(d.after_nu))}, "nu not increasing"),
        (
            lambda d: {"after_beta_tau": tuple(reversed(d.after_beta_tau))},
            "tau not decreasing",
        ),
        (
            lambda d: {"crossings": tuple(reversed(d.crossings))},
            "crossings not decreasing",
        ),
    ],
)
def test_purge_failures_detected(worked_example_inputs, change, message):
    problem = AllocationProblem.from_inputs(*worked_example_inputs)
    _, diagnostics = allocate_with_diagnostics(*worked_example_inputs)
    failures = _purge_failures(problem, replace(diagnostics, **change(diagnostics)))
    assert any(message in failure for failure in failures)


@pytest.mark.slow
def test_verify_full_run():
    report = verify(n_instances=500, l_min=2, l_max=8, seed=0)
    assert report.passed, report.failures[:10]
