"""Scenario building convenience functions for the scalloc CLI."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import click
import typer
import yaml
from pydantic import ValidationError
from typing_extensions import Annotated

from ..config import ScenarioConfig, create_two_group_configuration, save_scenario
from ..config.support import SupportedPolicy, SupportedUtility
from ..config.validators import parse_sweep_values

WORK_DIR = Path.cwd()

app = typer.Typer()


@dataclass
class ConfOptions:
    """Data class for containing CLI `conf` command option values."""

    dir: Path
    name: str
    suffix: str
    force: bool
    print: bool

    @property
    def path(self) -> Path:
        """Path of the scenario file.

        Returns
        -------
        pathlib.Path
            `dir / name` with the suffix.
        """
        return (self.dir / self.name).with_suffix(self.suffix)


def _conf_exit(ctx: typer.Context, config: ScenarioConfig) -> None:
    """
    Save the scenario and print it if requested.

    Parameters
    ----------
    ctx : typer.Context
        Typer Context.
    config : ScenarioConfig
        Scenario.

    Raises
    ------
    typer.Exit
        With code 3 if the file exists and `--force` was not given.
    """
    options: ConfOptions = ctx.obj
    if options.path.exists() and not options.force:
        typer.echo(f"To overwrite '{options.path}' use flag --force/-F.", err=True)
        raise typer.Exit(code=3)
    save_scenario(config, options.path)
    if options.print:
        typer.echo(yaml.dump(config.model_dump(mode="json"), sort_keys=False))


@app.callback()
def conf_options(  # numpydoc ignore=PR01
    ctx: typer.Context,
    dir: Annotated[
        Path,
        typer.Option(
            "--dir", "-d", exists=True, help="Directory to save the scenario file to."
        ),
    ] = WORK_DIR,
    name: Annotated[
        str, typer.Option("--name", "-n", help="The scenario file name.")
    ] = "scenario",
    suffix: Annotated[
        str,
        typer.Option(
            "--suffix",
            help="File extension.",
            click_type=click.Choice([".yml", ".yaml", ".json"]),
        ),
    ] = ".yml",
    force: Annotated[
        bool,
        typer.Option(
            "--force", "-F", help="Whether to overwrite existing scenario files."
        ),
    ] = False,
    print: Annotated[
        bool,
        typer.Option(
            "--print", "-p", help="Whether to print the scenario to the console."
        ),
    ] = False,
):
    """Build and save scenario files."""
    ctx.obj = ConfOptions(dir, name, suffix, force, print)


@app.command()
def two_group(  # numpydoc ignore=PR01
    ctx: typer.Context,
    experiment_name: Annotated[
        str, typer.Option("--experiment-name", "-e", help="Name of the experiment.")
    ],
    policy: Annotated[
        str,
        typer.Option(
            "--policy",
            help="Scheduling policy.",
            click_type=click.Choice(SupportedPolicy.values()),
        ),
    ] = "sc",
    utility: Annotated[
        str,
        typer.Option(
            "--utility",
            help="Network utility.",
            click_type=click.Choice(SupportedUtility.values()),
        ),
    ] = "proportional_fair",
    k_max: Annotated[
        Optional[int],
        typer.Option("--k-max", min=1, help="User cap of the sc_capped policy."),
    ] = None,
    n_users_a: Annotated[int, typer.Option("--n-a", min=1, help="Users in A.")] = 10,
    n_users_b: Annotated[int, typer.Option("--n-b", min=1, help="Users in B.")] = 10,
    mean_snr_db_a: Annotated[
        float, typer.Option("--snr-a", help="Mean SNR of group A in dB.")
    ] = 0.0,
    mean_snr_db_b: Annotated[
        float, typer.Option("--snr-b", help="Mean SNR of group B in dB.")
    ] = 0.0,
    n_blocks: Annotated[
        int, typer.Option("--n-blocks", min=1, help="Simulated blocks.")
    ] = 100_000,
    window: Annotated[
        int, typer.Option("--window", min=1, help="Averaging window in blocks.")
    ] = 1000,
    seed: Annotated[int, typer.Option("--seed", min=0, help="Base seed.")] = 0,
    sweep_values: Annotated[
        Optional[str],
        typer.Option(
            "--sweep-b", help="Sweep of the mean SNR of B, e.g. 0:20:2."
        ),
    ] = None,
):
    """Scenario with a reference group A and a group B of variable mean SNR."""
    try:
        config = create_two_group_configuration(
            experiment_name=experiment_name,
            policy=policy,
            n_users_a=n_users_a,
            n_users_b=n_users_b,
            mean_snr_db_a=mean_snr_db_a,
            mean_snr_db_b=mean_snr_db_b,
            utility=utility,
            k_max=k_max,
            n_blocks=n_blocks,
            window=window,
            seed=seed,
            sweep_values=(
                parse_sweep_values(sweep_values) if sweep_values is not None else None
            ),
        )
    except (ValidationError, ValueError) as error:
        typer.echo(f"Configuration error: {error}", err=True)
        raise typer.Exit(code=2) from error
    _conf_exit(ctx, config)
