"""Convenience functions to create scenario configurations."""

from typing import List, Optional

from .scenario_model import ScenarioConfig


def create_two_group_configuration(
    experiment_name: str,
    policy: str,
    n_users_a: int = 10,
    n_users_b: int = 10,
    mean_snr_db_a: float = 0.0,
    mean_snr_db_b: float = 0.0,
    utility: str = "proportional_fair",
    k_max: Optional[int] = None,
    greedy: bool = True,
    n_blocks: int = 100_000,
    window: int = 1000,
    seed: int = 0,
    sweep_values: Optional[List[float]] = None,
) -> ScenarioConfig:
    """
    Create a scenario with a reference group A and a group B of variable SNR.

    When `sweep_values` is given, the scenario sweeps the mean SNR of group B.

    Parameters
    ----------
    experiment_name : str
        Name of the experiment.
    policy : str
        Scheduling policy, one of "round_robin", "max_rate", "pf_ts", "sc" and
        "sc_capped".
    n_users_a : int, optional
        Users in group A, by default 10.
    n_users_b : int, optional
        Users in group B, by default 10.
    mean_snr_db_a : float, optional
        Mean SNR of group A in dB, by default 0.
    mean_snr_db_b : float, optional
        Mean SNR of group B in dB, by default 0.
    utility : str, optional
        Utility, "proportional_fair" or "sum_rate", by default "proportional_fair".
    k_max : int or None, optional
        User cap, required for "sc_capped", by default None.
    greedy : bool, optional
        Greedy subset search for "sc_capped", by default True.
    n_blocks : int, optional
        Number of blocks, by default 100000.
    window : int, optional
        Throughput averaging window, by default 1000.
    seed : int, optional
        Base seed, by default 0.
    sweep_values : list of float or None, optional
        Mean SNRs of group B to sweep, by default None.

    Returns
    -------
    ScenarioConfig
        Scenario.

    Examples
    --------
    >>> from scalloc.config import create_two_group_configuration
    >>> config = create_two_group_configuration("study", policy="sc", n_blocks=20000)
    >>> config.group_names
    ['A', 'B']
    """
    policy_dict: dict = {"kind": policy, "utility": utility, "greedy": greedy}
    if k_max is not None:
        policy_dict["k_max"] = k_max

    config_dict: dict = {
        "experiment_name": experiment_name,
        "groups": [
            {"name": "A", "count": n_users_a, "mean_snr_db": mean_snr_db_a},
            {"name": "B", "count": n_users_b, "mean_snr_db": mean_snr_db_b},
        ],
        "n_blocks": n_blocks,
        "window": window,
        "seed": seed,
        "policy": policy_dict,
    }
    if sweep_values is not None:
        config_dict["sweep"] = {
            "parameter": "groupB.mean_snr_db",
            "values": sweep_values,
        }

    return ScenarioConfig.model_validate(config_dict)
