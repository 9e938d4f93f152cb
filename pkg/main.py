from lrpcdec.core.config import Config, load_config, resolve_config
from lrpcdec.core.errors import ConfigError, LrpcError, ResourceLimitError
from lrpcdec.core.lrpc_log import lrpc_except
from lrpcdec.run_parallel import prepare_workspace, run_experiment
from lrpcdec.summary import experiment_stem, format_summary, write_summary
from lrpcdec.sweep import SWEEP_PARAMETERS, sweep, write_sweep_table

from dataclasses import replace
from pathlib import Path
import click
import contextlib
import os
import sys

# Generated using https://www.asciiart.eu
SPLASH: str = r"""
-----------------------------------------
 _                          _
| |_ __ _ __   ___ ___   __| | ___  ___
| | '__| '_ \ / __/ _ \ / _` |/ _ \/ __|
| | |  | |_) | (_| (_) | (_| |  __/ (__
|_|_|  | .__/ \___\___/ \__,_|\___|\___|
       |_|
-----------------------------------------
"""

EXIT_CONFIG_ERROR = 2
EXIT_RESOURCE_ERROR = 3
EXIT_OTHER_ERROR = 1


def show_splash():
    print(SPLASH)


def parse_values(text: str) -> list[int]:
    """Parse a comma separated list of integers, e.g. 40,41"""
    try:
        return [int(item) for item in text.split(",") if item.strip() != ""]
    except ValueError as e:
        raise ConfigError(f"Sweep values must be comma separated integers, got '{text}'") from e


def apply_overrides(config: Config, overrides: dict) -> Config:
    """Apply the command line flags that were given on top of a configuration

    Giving only one of n and c lets the other follow from n - k = rd - c.
    """
    code_keys = ("q", "m", "n", "k", "r", "d", "c")
    decoder_keys = (
        "algorithm",
        "t",
        "max_rounds",
        "candidate_cap",
        "faithful_guard",
        "random_filter",
    )
    run_keys = ("trials", "seed", "n_processes", "full_decode", "output", "verbose")
    given = {key: value for key, value in overrides.items() if value is not None}

    code = replace(config.code, **{k: v for k, v in given.items() if k in code_keys})
    if "n" in given and "c" not in given:
        code = replace(code, c=None)
    elif "c" in given and "n" not in given:
        code = replace(code, n=None)
    workspace = config.workspace
    if "workspace" in given:
        workspace = replace(workspace, workspace_path=given["workspace"])
    return replace(
        config,
        workspace=workspace,
        code=code,
        decoder=replace(
            config.decoder, **{k: v for k, v in given.items() if k in decoder_keys}
        ),
        run=replace(config.run, **{k: v for k, v in given.items() if k in run_keys}),
    )


def run_cli(configuration: Config, vary: str | None, values: str | None, term: bool):
    configuration = resolve_config(configuration)
    ws = prepare_workspace(configuration)
    output = configuration.run.output
    if vary is None:
        summary = run_experiment(configuration, no_progress=not term, ws=ws)
        path = write_summary(summary, ws)
        print(format_summary(summary, output, configuration.run.verbose))
        print(f"Summary written to {path}")
        return

    if values is None:
        raise ConfigError("--sweep needs --values")
    summaries = sweep(configuration, vary, parse_values(values), not term, ws)
    for summary in summaries:
        write_summary(summary, ws)
    table_path = ws.get_summary_path(f"sweep_{vary}_{experiment_stem(configuration)}", "csv")
    write_sweep_table(summaries, table_path)
    for summary in summaries:
        print(format_summary(summary, output, configuration.run.verbose))
    print(f"Sweep table written to {table_path}")


@click.command()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True),
    default=None,
    help="JSON configuration file; flags given on the command line override it",
)
@click.option("--workspace", type=str, default=None, help="Workspace directory")
@click.option("--q", type=int, default=None, help="Prime size of the base field")
@click.option("--m", type=int, default=None, help="Extension degree")
@click.option("--n", type=int, default=None, help="Code length, defaults to rd - c + k")
@click.option("--k", type=int, default=None, help="Code dimension")
@click.option("--r", type=int, default=None, help="Rank of the planted errors")
@click.option("--d", type=int, default=None, help="Dual rank weight")
@click.option("--c", type=int, default=None, help="Codimension of S in A.E")
@click.option("--t", type=int, default=None, help="Shifted spaces per round (intersect)")
@click.option(
    "--algorithm",
    type=click.Choice(["basic", "multiset", "intersect"]),
    default=None,
    help="Support recovery decoder",
)
@click.option("--trials", type=int, default=None, help="Number of trials")
@click.option("--seed", type=int, default=None, help="64-bit experiment seed")
@click.option("--max-rounds", type=int, default=None, help="Round budget (intersect)")
@click.option(
    "--candidate-cap", type=int, default=None, help="Maximum multiset size (multiset)"
)
@click.option(
    "--full-decode/--no-full-decode",
    default=None,
    help="Also recover the error coordinates",
)
@click.option(
    "--output",
    type=click.Choice(["json", "csv"]),
    default=None,
    help="Summary format",
)
@click.option(
    "--parallelism", type=int, default=None, help="Number of worker processes"
)
@click.option(
    "--sweep",
    "vary",
    type=click.Choice(list(SWEEP_PARAMETERS)),
    default=None,
    help="Parameter to sweep",
)
@click.option("--values", type=str, default=None, help="Comma separated sweep values")
@click.option(
    "--faithful-guard/--text-guard",
    default=None,
    help="Multiset guard c < d - 2 instead of c <= d - 2",
)
@click.option(
    "--random-filter/--ordered-filter",
    default=None,
    help="Filter multiset candidates in random order",
)
@click.option(
    "--verbose/--quiet", default=None, help="Also report every trial"
)
@click.option(
    "--term/--no-term",
    default=True,
    help="Whether or not lrpcdec displays progress text to the terminal",
    show_default=True,
)
def main(config_path: str | None, vary: str | None, values: str | None, term: bool, **flags):
    """
    lrpcdec runs Monte-Carlo experiments of LRPC error support recovery. Without a
    configuration file the defaults run the benchmark experiment
    (intersect decoder, q=2, r=5, d=5, c=1, m=41, t=4, k=1, 1000 trials).
    """
    flags["n_processes"] = flags.pop("parallelism")
    try:
        configuration = Config() if config_path is None else load_config(Path(config_path))
        configuration = apply_overrides(configuration, flags)
        if not term:
            with contextlib.redirect_stdout(open(os.devnull, "w")):
                run_cli(configuration, vary, values, term)
        else:
            show_splash()
            run_cli(configuration, vary, values, term)
    except ConfigError as e:
        click.echo(f"Configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)
    except ResourceLimitError as e:
        lrpc_except(__name__, e)
        click.echo(f"Resource limit exceeded: {e}", err=True)
        sys.exit(EXIT_RESOURCE_ERROR)
    except LrpcError as e:
        lrpc_except(__name__, e)
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_OTHER_ERROR)
    except OSError as e:
        click.echo(f"I/O error: {e}", err=True)
        sys.exit(EXIT_OTHER_ERROR)


if __name__ == "__main__":
    main()
