from lrpcdec.core.config import resolve_config
from lrpcdec.core.errors import ResourceLimitError
from lrpcdec.core.workspace import Workspace
from lrpcdec.parallel.status_message import StatusMessage, TrialBatch, WorkerFailure
from lrpcdec.parallel.trial_stack import create_trial_stacks
from lrpcdec.run import progress_interval, run_trial_stack, run_trials
from lrpcdec.run_parallel import run_experiment
from lrpcdec.summary import (
    CSV_COLUMNS,
    experiment_stem,
    format_summary,
    summarize,
    write_summary,
)
from lrpcdec.trial import TrialReport

from dataclasses import replace
from json import loads
import multiprocessing
import pytest


def _report(
    idx: int, outcome: str, correct: bool, degenerate: bool = False, rounds: int = 2
) -> TrialReport:
    resamples = 100 if degenerate else 0
    return TrialReport(idx, outcome, correct, None, degenerate, resamples, 5, 1, rounds, 0, 1.0)


def _rows(reports) -> list[dict]:
    rows = []
    for report in sorted(reports, key=lambda report: report.trial_index):
        row = report.to_row()
        row.pop("elapsed_ms")
        rows.append(row)
    return rows


def test_trial_stacks_snake():
    assert create_trial_stacks(7, 3) == [[0, 5, 6], [1, 4], [2, 3]]
    assert create_trial_stacks(2, 4) == [[0], [1]]
    stacks = create_trial_stacks(1000, 6)
    assert sorted(idx for stack in stacks for idx in stack) == list(range(1000))


def test_progress_interval():
    assert progress_interval(10) == (10, 1)
    assert progress_interval(5000) == (100, 50)
    assert progress_interval(1050) == (95, 11)


def test_summary_counts(small_config):
    config = resolve_config(small_config)
    reports = [
        _report(2, "degenerate", False, degenerate=True, rounds=0),
        _report(0, "success", True, rounds=3),
        _report(1, "failure:stray", False, rounds=1),
    ]
    summary = summarize(config, reports, 12.5)
    assert summary.trials == 3
    assert summary.counted == 2
    assert summary.successes == 1
    assert summary.failures == 1
    assert summary.degenerate == 1
    assert summary.resamples == 100
    assert summary.success_rate == 0.5
    assert summary.standard_error == pytest.approx(0.5 / 2**0.5)
    assert summary.mean_rounds == 2.0
    assert summary.outcome_counts == {"degenerate": 1, "success": 1, "failure:stray": 1}
    assert [report.trial_index for report in summary.reports] == [0, 1, 2]
    assert summary.full_decode_successes is None


def test_summary_formats(small_config):
    config = resolve_config(small_config)
    summary = summarize(config, [_report(0, "success", True)], 3.0)
    assert summary.success_rate == 1.0
    data = loads(format_summary(summary, "json"))
    assert data["schema_version"] == 1
    assert data["t"] == 2
    assert data["success_rate"]["numerator"] == 1
    assert data["success_rate"]["denominator"] == 1
    assert "stray" in data["estimates"]
    assert "trial_reports" not in data
    assert len(loads(format_summary(summary, "json", verbose=True))["trial_reports"]) == 1
    header, row = format_summary(summary, "csv").strip().splitlines()
    assert header == ",".join(CSV_COLUMNS)
    assert row.startswith("2,16,6,1,2,3,1,2,intersect,1,1,0,1.0,")


def test_write_summary(small_config):
    config = resolve_config(small_config)
    config = replace(config, run=replace(config.run, verbose=True))
    ws = Workspace(config.workspace)
    summary = summarize(config, [_report(0, "success", True)], 3.0)
    path = write_summary(summary, ws)
    assert path.exists()
    assert path.name == f"{experiment_stem(config)}_summary.json"
    assert ws.get_trials_path(experiment_stem(config)).exists()


def test_stacks_do_not_change_results(small_config):
    config = resolve_config(small_config)
    together = run_trial_stack(config, list(range(8)))
    split = []
    for stack in create_trial_stacks(8, 3):
        split.extend(run_trial_stack(config, stack))
    assert _rows(together) == _rows(split)


def test_child_loop_reports_through_queue(small_config):
    config = resolve_config(small_config)
    Workspace(config.workspace)
    queue = multiprocessing.get_context("spawn").SimpleQueue()
    run_trials(config, [0, 1, 2], queue, 0, "test")
    messages = []
    while not queue.empty():
        messages.append(queue.get())
    assert sum(isinstance(msg, StatusMessage) for msg in messages) == 3
    assert str(messages[0]) == "Experiment test | Task: Decoding |"
    batch = messages[-1]
    assert isinstance(batch, TrialBatch)
    assert _rows(batch.reports) == _rows(run_trial_stack(config, [0, 1, 2]))
    queue.close()


def test_child_loop_reports_failure(small_config):
    config = resolve_config(small_config)
    config = replace(
        config, decoder=replace(config.decoder, algorithm="multiset", candidate_cap=1)
    )
    Workspace(config.workspace)
    queue = multiprocessing.get_context("spawn").SimpleQueue()
    run_trials(config, [4, 5], queue, 1, "test")
    message = queue.get()
    assert isinstance(message, WorkerFailure)
    assert message.trial_index == 4
    assert isinstance(message.error, ResourceLimitError)
    assert queue.empty()
    queue.close()


def test_run_experiment_in_process(small_config):
    summary = run_experiment(small_config, no_progress=True)
    assert summary.trials == 8
    assert summary.counted + summary.degenerate == 8
    assert 0.0 <= summary.success_rate <= 1.0
    log_path = Workspace(small_config.workspace).get_log_file_path(-1)
    assert "Experiment intersect_q2_m16_n6_k1_r2_d3_c1_t2" in log_path.read_text()


def test_single_trial(small_config):
    config = replace(small_config, run=replace(small_config.run, trials=1))
    summary = run_experiment(config, no_progress=True)
    assert summary.counted == 1
    assert summary.success_rate in (0.0, 1.0)


def test_zero_rank_errors_always_decode(small_config):
    config = replace(
        small_config,
        code=replace(small_config.code, r=0, n=4, k=2, c=None),
        run=replace(small_config.run, trials=3, full_decode=True),
    )
    summary = run_experiment(config, no_progress=True)
    assert summary.success_rate == 1.0
    assert summary.full_decode_successes == 3


@pytest.mark.slow
def test_worker_count_does_not_change_results(small_config):
    serial = run_experiment(small_config, no_progress=True)
    config = replace(small_config, run=replace(small_config.run, n_processes=3))
    parallel = run_experiment(config, no_progress=True)
    assert _rows(serial.reports) == _rows(parallel.reports)
    assert serial.successes == parallel.successes
