from .core.config import Config
from .core.field import make_field
from .core.workspace import Workspace
from .core.lrpc_log import init_lrpc_logger_child, lrpc_info, lrpc_except
from .parallel.status_message import StatusMessage, TrialBatch, WorkerFailure
from .trial import TrialReport, run_trial

from multiprocessing.queues import SimpleQueue
from typing import Callable


def progress_interval(n_trials: int) -> tuple[int, int]:
    """Number of progress increments for a stack, and trials per increment

    Stacks of fewer than 1000 trials report every trial, larger ones every 1%.
    """
    if n_trials < 1000:
        return n_trials, 1
    flush_val = -(-n_trials // 100)
    return n_trials // flush_val, flush_val


def run_trial_stack(
    config: Config,
    trial_indices: list[int],
    on_progress: Callable[[], None] | None = None,
) -> list[TrialReport]:
    """Run a list of trials in the calling process

    Parameters
    ----------
    config: Config
        A configuration returned by resolve_config
    trial_indices: list[int]
        The trials to run
    on_progress: Callable[[], None] | None
        Called once per progress increment, see progress_interval

    Returns
    -------
    list[TrialReport]
        The reports, in the order of trial_indices
    """
    params = make_field(config.code.q, config.code.m)
    _, flush_val = progress_interval(len(trial_indices))
    reports = []
    count = 0
    for idx in trial_indices:
        reports.append(run_trial(config, idx, params))
        count += 1
        if on_progress is not None and count == flush_val:
            count = 0
            on_progress()
    return reports


def run_trials(
    config: Config,
    trial_indices: list[int],
    queue: SimpleQueue,
    process_id: int,
    experiment: str,
):
    """lrpcdec child process main loop

    This is the function to run a single processor of lrpcdec. Typically called by
    run_experiment and spawned to a child process. The reports are sent back as a
    single TrialBatch; an exception is logged and sent back as a WorkerFailure.

    Parameters
    ----------
    config: Config
        A configuration returned by resolve_config
    trial_indices: list[int]
        The set of trials for this process
    queue: SimpleQueue
        A communication channel back to the parent process
    process_id: int
        The process id, used to name the log file
    experiment: str
        The experiment name shown in the progress bar
    """
    ws = Workspace(config.workspace)
    init_lrpc_logger_child(ws, process_id)
    lrpc_info(__name__, f"Running {len(trial_indices)} trials of {experiment}")

    total, flush_val = progress_interval(len(trial_indices))
    msg = StatusMessage(experiment, total, 1)  # We always increment by 1
    params = make_field(config.code.q, config.code.m)
    reports: list[TrialReport] = []
    # Lock the processing behind a try so that exceptions reach the parent
    for idx in trial_indices:
        try:
            reports.append(run_trial(config, idx, params))
        except Exception as e:
            lrpc_except(__name__, e)
            queue.put(WorkerFailure(process_id, idx, e))
            return
        if len(reports) % flush_val == 0:
            queue.put(msg)

    queue.put(TrialBatch(process_id, reports))
    lrpc_info(__name__, f"Finished {len(reports)} trials")
