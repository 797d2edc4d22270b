"""
Module for CLI functionality and entrypoint.

Contains the CLI entrypoint, the `run` function, and the first level subcommands
`run`, `sweep`, `verify` and `example-l7`. The `conf` subcommand is added through
`app.add_typer`, its implementation is contained in the conf.py file.

Exit codes are 0 on success, 1 when verification fails, 2 for configuration errors
and 3 for I/O errors.
"""

from pathlib import Path
from typing import Callable, Optional, TypeVar

import click
import typer
import yaml
from pydantic import ValidationError
from typing_extensions import Annotated

from ..config import ScenarioConfig, load_scenario
from ..config.support import SupportedFormat
from ..config.validators import parse_sweep_parameter, parse_sweep_values
from ..experiment import run_experiment, run_sweep, run_worked_example, verify
from ..file_io import emit
from ..utils import get_logger
from . import conf

logger = get_logger(__name__)

EXIT_VERIFICATION = 1
EXIT_CONFIG = 2
EXIT_IO = 3

T = TypeVar("T")

app = typer.Typer(
    help="Superposition-coding power allocation and block-fading scheduling "
    "simulations."
)
app.add_typer(conf.app, name="conf", help="Build and save scenario files.")

ConfigOption = Annotated[
    Path,
    typer.Option(
        "--config",
        "-c",
        help="Path to a scenario file (JSON or YAML).",
        file_okay=True,
        dir_okay=False,
    ),
]
OutOption = Annotated[
    Path,
    typer.Option("--out", "-o", help="Directory receiving the report files."),
]
FormatOption = Annotated[
    str,
    typer.Option(
        "--format",
        "-f",
        help="Report format.",
        click_type=click.Choice(SupportedFormat.values()),
    ),
]


def _guard(action: Callable[[], T]) -> T:
    """Run `action`, mapping configuration and I/O errors to exit codes.

    Parameters
    ----------
    action : callable
        Action to run.

    Returns
    -------
    T
        Result of the action.

    Raises
    ------
    typer.Exit
        With code 2 on configuration errors and 3 on I/O errors.
    """
    try:
        return action()
    except (ValidationError, ValueError, yaml.YAMLError) as error:
        logger.error(f"Configuration error: {error}")
        raise typer.Exit(code=EXIT_CONFIG) from error
    except OSError as error:
        logger.error(f"I/O error: {error}")
        raise typer.Exit(code=EXIT_IO) from error


def _load(config_path: Path) -> ScenarioConfig:
    """Load a scenario, mapping errors to exit codes.

    Parameters
    ----------
    config_path : pathlib.Path
        Scenario file.

    Returns
    -------
    ScenarioConfig
        Scenario.
    """
    return _guard(lambda: load_scenario(config_path))


@app.command(name="run")
def run_command(  # numpydoc ignore=PR01
    config: ConfigOption,
    out: OutOption = Path("."),
    data_format: FormatOption = "json",
    progress: Annotated[
        bool, typer.Option("--progress/--no-progress", help="Show a progress bar.")
    ] = False,
):
    """Simulate a scenario and write its report."""
    scenario = _load(config)
    report = run_experiment(scenario, show_progress=progress)
    for path in _guard(lambda: emit(report, data_format, out)):
        typer.echo(str(path))


@app.command()
def sweep(  # numpydoc ignore=PR01
    config: ConfigOption,
    param: Annotated[
        Optional[str],
        typer.Option(
            "--param",
            "-p",
            help="Swept parameter, e.g. groupB.mean_snr_db. Defaults to the "
            "scenario's sweep.",
        ),
    ] = None,
    values: Annotated[
        Optional[str],
        typer.Option(
            "--values",
            "-v",
            help="Values as start:stop:step or a comma separated list.",
        ),
    ] = None,
    out: OutOption = Path("."),
    data_format: FormatOption = "csv",
    workers: Annotated[
        int, typer.Option("--workers", "-w", min=1, help="Worker processes.")
    ] = 1,
):
    """Simulate every point of a sweep over a group mean SNR."""
    scenario = _load(config)

    def configure() -> ScenarioConfig:
        data = scenario.model_dump()
        if param is not None:
            parse_sweep_parameter(param)
            previous = data["sweep"]["values"] if data["sweep"] else []
            data["sweep"] = {"parameter": param, "values": previous}
        if values is not None:
            if data["sweep"] is None:
                raise ValueError("Give --param or define a sweep in the scenario.")
            data["sweep"]["values"] = parse_sweep_values(values)
        if data["sweep"] is None:
            raise ValueError("Scenario defines no sweep, give --param and --values.")
        return ScenarioConfig.model_validate(data)

    swept = _guard(configure)
    series = run_sweep(swept, n_workers=workers)
    for path in _guard(lambda: emit(series, data_format, out)):
        typer.echo(str(path))


@app.command(name="verify")
def verify_command(  # numpydoc ignore=PR01
    instances: Annotated[
        int, typer.Option("--instances", "-n", min=1, help="Random instances.")
    ] = 500,
    lmin: Annotated[int, typer.Option("--lmin", min=1, help="Fewest users.")] = 2,
    lmax: Annotated[int, typer.Option("--lmax", min=1, help="Most users.")] = 8,
    seed: Annotated[int, typer.Option("--seed", "-s", min=0, help="Seed.")] = 0,
):
    """Check the allocator against independent solvers."""
    report = _guard(lambda: verify(instances, lmin, lmax, seed))
    typer.echo(
        f"instances={report.n_instances} max_gap={report.max_relative_gap:.3e} "
        f"max_kkt={report.max_kkt_residual:.3e} failures={len(report.failures)}"
    )
    if not report.passed:
        raise typer.Exit(code=EXIT_VERIFICATION)


@app.command(name="example-l7")
def example_l7():  # numpydoc ignore=PR01
    """Solve the seven-user example and print every step."""
    example = run_worked_example()
    for line in example.describe():
        typer.echo(line)
    if not example.matches_expected():
        raise typer.Exit(code=EXIT_VERIFICATION)


def run():
    """Initialise the CLI app."""
    app()


if __name__ == "__main__":
    run()
