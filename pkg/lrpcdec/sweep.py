from .core.config import Config, resolve_config
from .core.errors import ConfigError
from .core.workspace import Workspace
from .core.lrpc_log import lrpc_info
from .run_parallel import run_experiment
from .summary import ExperimentSummary, summaries_table

from dataclasses import replace
from pathlib import Path

SWEEP_PARAMETERS = ("m", "c", "t", "r", "d", "k", "trials")


def apply_sweep_value(config: Config, vary: str, value: int) -> Config:
    """A copy of a resolved configuration with one parameter changed

    When r, d, c or k change, n is recomputed as rd - c + k, so n - k = rd - c
    keeps holding; varying k therefore leaves n - k fixed.

    Parameters
    ----------
    config: Config
        A configuration returned by resolve_config
    vary: str
        One of SWEEP_PARAMETERS
    value: int
        The new value

    Returns
    -------
    Config
        The modified, unresolved configuration

    Raises
    ------
    ConfigError
        If vary is not a sweepable parameter
    """
    match vary:
        case "m":
            return replace(config, code=replace(config.code, m=value))
        case "c" | "r" | "d" | "k":
            code = replace(config.code, n=None, **{vary: value})
            return replace(config, code=code)
        case "t":
            return replace(config, decoder=replace(config.decoder, t=value))
        case "trials":
            return replace(config, run=replace(config.run, trials=value))
        case _:
            raise ConfigError(
                f"Cannot sweep over '{vary}', expected one of {SWEEP_PARAMETERS}"
            )


def sweep(
    config: Config,
    vary: str,
    values: list[int],
    no_progress: bool = False,
    ws: Workspace | None = None,
) -> list[ExperimentSummary]:
    """Run one experiment per value of a parameter

    Parameters
    ----------
    config: Config
        The base configuration
    vary: str
        One of SWEEP_PARAMETERS
    values: list[int]
        The values to run
    no_progress: bool
        If this is True progress bars will not be displayed (default is False)
    ws: Workspace | None
        The project Workspace

    Returns
    -------
    list[ExperimentSummary]
        One summary per value, in the order of values

    Raises
    ------
    ConfigError
        If vary is invalid, values is empty, or any resulting configuration is
        invalid
    """
    if vary not in SWEEP_PARAMETERS:
        raise ConfigError(f"Cannot sweep over '{vary}', expected one of {SWEEP_PARAMETERS}")
    if len(values) == 0:
        raise ConfigError("A sweep needs at least one value")
    base = resolve_config(config)
    # Validate every point before running any of them
    configs = [resolve_config(apply_sweep_value(base, vary, value)) for value in values]
    summaries = []
    for value, local_config in zip(values, configs):
        lrpc_info(__name__, f"Sweep {vary} = {value}")
        summaries.append(run_experiment(local_config, no_progress, ws))
    return summaries


def write_sweep_table(summaries: list[ExperimentSummary], path: Path):
    """Write one csv row per summary"""
    summaries_table(summaries).write_csv(path)
