from .core.config import Config, resolve_config, regime_warnings, serialize_config
from .core.errors import LrpcError
from .core.workspace import Workspace
from .core.lrpc_log import init_lrpc_logger_parent, lrpc_error, lrpc_info, lrpc_warn
from .parallel.status_message import StatusMessage, TrialBatch, WorkerFailure
from .parallel.trial_stack import create_trial_stacks
from .run import run_trials, run_trial_stack, progress_interval
from .summary import ExperimentSummary, experiment_stem, summarize
from .trial import TrialReport

import multiprocessing
from copy import deepcopy
from tqdm import tqdm
from time import time


def prepare_workspace(config: Config) -> Workspace:
    """Create the workspace and start logging in the parent process

    Old log files are removed.

    Parameters
    ----------
    config: Config
        The project configuration

    Returns
    -------
    Workspace
        The project Workspace
    """
    ws = Workspace(config.workspace)
    # Get rid of any old log files
    ws.clear_log_path()
    # initialize our logger for the parent process
    init_lrpc_logger_parent(ws)
    return ws


def _run_in_children(
    config: Config, stacks: list[list[int]], experiment: str, no_progress: bool
) -> list[TrialReport]:
    context = multiprocessing.get_context("spawn")
    queues: list = []
    processes: list = []
    pbars: list[tqdm] = []
    reports: list[TrialReport] = []
    failures: list[WorkerFailure] = []

    # Create the child processes
    for s in range(0, len(stacks)):
        local_config = deepcopy(config)
        queues.append(context.SimpleQueue())
        processes.append(
            context.Process(
                target=run_trials,
                args=(local_config, stacks[s], queues[-1], s, experiment),
                daemon=False,
            )
        )
        total, _ = progress_interval(len(stacks[s]))
        pbars.append(
            tqdm(total=total, disable=no_progress, miniters=1, mininterval=0.001)
        )
        pbars[-1].set_description(f"| Process {s} | Waiting... |")

    for process in processes:
        process.start()

    anyone_alive: bool
    # main loop
    while True:
        anyone_alive = False
        # check processes still going, or if queues have data to be read out
        for idx, process in enumerate(processes):
            if process.is_alive() or (not queues[idx].empty()):
                anyone_alive = True
                break

        if not anyone_alive:
            break

        # Read messages out of the queues
        for idx, q in enumerate(queues):
            if q.empty():
                continue

            msg = q.get()
            match msg:
                case StatusMessage():
                    pbars[idx].set_description(f"| Process {idx} | {msg}")
                    pbars[idx].update(msg.progress)
                case TrialBatch():
                    reports.extend(msg.reports)
                case WorkerFailure():
                    failures.append(msg)

    # Shutdown
    for bar in pbars:
        bar.close()

    for q in queues:
        q.close()

    for process in processes:
        process.join()

    if len(failures) != 0:
        first = min(failures, key=lambda failure: failure.trial_index)
        for failure in failures:
            lrpc_error(
                __name__,
                f"Process {failure.process_id} failed on trial {failure.trial_index}: {failure.error}",
            )
        raise first.error
    if len(reports) != sum(len(stack) for stack in stacks):
        raise LrpcError(
            f"Child processes returned {len(reports)} of {sum(len(stack) for stack in stacks)} trial reports"
        )
    return reports


def run_experiment(
    config: Config, no_progress: bool = False, ws: Workspace | None = None
) -> ExperimentSummary:
    """lrpcdec's parent process function for one experiment

    The trials are split into stacks, one per process. With a single process the
    trials run in the parent; otherwise child processes are spawned and report
    back through queues. Every trial owns its random stream, so the summary does
    not depend on the number of processes.

    Parameters
    ----------
    config: Config
        The project configuration
    no_progress: bool
        If this is True progress bars will not be displayed (default is False)
    ws: Workspace | None
        The project Workspace. If None, one is created from the configuration
        and logging is initialized

    Returns
    -------
    ExperimentSummary
        The aggregated result

    Raises
    ------
    ConfigError
        If the configuration is invalid
    LrpcError
        Any error raised by a trial, in the parent or a child process
    """
    # For housekeeping, track and log how long the execution takes
    start = time()
    config = resolve_config(config)
    if ws is None:
        ws = prepare_workspace(config)

    experiment = experiment_stem(config)
    lrpc_info(__name__, f"Experiment {experiment}: {serialize_config(config)}")
    for warning in regime_warnings(config):
        lrpc_warn(__name__, warning)
        print(f"Warning: {warning}")

    n_processes = min(config.run.n_processes, config.run.trials)
    stacks = create_trial_stacks(config.run.trials, n_processes)
    lrpc_info(__name__, f"Trial stacks: {[len(stack) for stack in stacks]} trials")

    reports: list[TrialReport]
    if len(stacks) == 1:
        total, _ = progress_interval(config.run.trials)
        with tqdm(total=total, disable=no_progress, miniters=1, mininterval=0.001) as bar:
            bar.set_description(f"| Process 0 | Experiment {experiment} |")
            reports = run_trial_stack(config, stacks[0], lambda: bar.update(1))
    else:
        reports = _run_in_children(config, stacks, experiment, no_progress)

    stop = time()
    summary = summarize(config, reports, (stop - start) * 1000.0)
    lrpc_info(
        __name__,
        f"Experiment {experiment}: {summary.successes}/{summary.counted} successes, {summary.degenerate} degenerate, {summary.resamples} resamples",
    )

    duration = stop - start
    hours, sec = divmod(duration, 3600)
    minutes, sec = divmod(sec, 60)
    lrpc_info(
        __name__, f"Total elapsed time: {int(hours)} hrs {int(minutes)} min {sec:.4} s"
    )
    return summary
