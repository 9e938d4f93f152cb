from .core.config import Config, serialize_config
from .core.constants import SCHEMA_VERSION
from .core.workspace import Workspace
from .decoders.estimates import (
    ProbabilityEstimate,
    default_t,
    estimate_basic_intersect,
    estimate_stray,
    estimate_syndrome_fill,
)
from .trial import TrialReport

from collections import Counter
from dataclasses import dataclass, field
from json import dumps
from pathlib import Path
from typing import Any
from polars import DataFrame
import math

CSV_COLUMNS = (
    "q",
    "m",
    "n",
    "k",
    "r",
    "d",
    "c",
    "t",
    "algorithm",
    "trials",
    "successes",
    "degenerate",
    "success_rate",
    "mean_rounds",
    "seed",
    "wall_ms",
)


def effective_t(config: Config) -> int | None:
    """The t the intersect decoder runs with, None for the other decoders"""
    if config.decoder.algorithm != "intersect":
        return None
    if config.decoder.t is not None:
        return config.decoder.t
    code = config.code
    if code.c is None or code.c < 1:
        return None
    return default_t(code.q, code.r, code.c)


def analytic_estimates(config: Config) -> dict[str, ProbabilityEstimate]:
    """The failure estimates that apply to a resolved configuration"""
    code = config.code
    estimates = {
        "syndrome_fill": estimate_syndrome_fill(code.q, code.r, code.d, code.n, code.k),
        "basic_intersect": estimate_basic_intersect(code.q, code.m, code.r, code.d),
    }
    t = effective_t(config)
    if t is not None:
        estimates["stray"] = estimate_stray(code.q, code.m, code.r, code.d, code.c, t)
    return estimates


@dataclass
class ExperimentSummary:
    """Aggregated result of an experiment

    Attributes
    ----------
    config: Config
        The resolved configuration
    trials: int
        Number of trials run
    successes: int
        Trials whose recovered support equals the planted one
    degenerate: int
        Trials whose resample budget ran out; excluded from the rate
    resamples: int
        Total number of redrawn instances
    full_decode_successes: int | None
        Trials whose coordinate recovery returned the planted error, None when
        full decoding was off
    mean_rounds: float
        Mean decoder rounds over the counted trials
    wall_ms: float
        Wall time of the experiment
    outcome_counts: dict[str, int]
        Number of trials per outcome label
    estimates: dict[str, ProbabilityEstimate]
        The analytic failure estimates for the parameters
    reports: list[TrialReport]
        The per-trial reports, sorted by trial index
    """

    config: Config
    trials: int
    successes: int
    degenerate: int
    resamples: int
    full_decode_successes: int | None
    mean_rounds: float
    wall_ms: float
    outcome_counts: dict[str, int] = field(default_factory=dict)
    estimates: dict[str, ProbabilityEstimate] = field(default_factory=dict)
    reports: list[TrialReport] = field(default_factory=list)

    @property
    def counted(self) -> int:
        return self.trials - self.degenerate

    @property
    def failures(self) -> int:
        return self.counted - self.successes

    @property
    def success_rate(self) -> float:
        if self.counted == 0:
            return 0.0
        return self.successes / self.counted

    @property
    def standard_error(self) -> float:
        """Binomial standard error of the success rate"""
        if self.counted == 0:
            return 0.0
        p = self.success_rate
        return math.sqrt(p * (1.0 - p) / self.counted)

    def to_dict(self, verbose: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "config": serialize_config(self.config),
            "t": effective_t(self.config),
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "degenerate": self.degenerate,
            "resamples": self.resamples,
            "success_rate": {
                "numerator": self.successes,
                "denominator": self.counted,
                "value": self.success_rate,
                "standard_error": self.standard_error,
            },
            "full_decode_successes": self.full_decode_successes,
            "mean_rounds": self.mean_rounds,
            "wall_ms": self.wall_ms,
            "outcomes": dict(sorted(self.outcome_counts.items())),
            "estimates": {
                name: {
                    "log_q_failure": estimate.log_q_failure,
                    "value": estimate.value,
                    "vacuous": estimate.vacuous,
                }
                for name, estimate in self.estimates.items()
            },
        }
        if verbose:
            data["trial_reports"] = [report.to_row() for report in self.reports]
        return data

    def to_row(self) -> dict[str, Any]:
        """One CSV row, with the columns of CSV_COLUMNS"""
        code = self.config.code
        return {
            "q": code.q,
            "m": code.m,
            "n": code.n,
            "k": code.k,
            "r": code.r,
            "d": code.d,
            "c": code.c,
            "t": effective_t(self.config),
            "algorithm": self.config.decoder.algorithm,
            "trials": self.trials,
            "successes": self.successes,
            "degenerate": self.degenerate,
            "success_rate": self.success_rate,
            "mean_rounds": self.mean_rounds,
            "seed": self.config.run.seed,
            "wall_ms": self.wall_ms,
        }


def summarize(
    config: Config, reports: list[TrialReport], wall_ms: float
) -> ExperimentSummary:
    """Reduce the trial reports of an experiment

    Parameters
    ----------
    config: Config
        The resolved configuration
    reports: list[TrialReport]
        Every trial's report, in any order
    wall_ms: float
        Wall time of the experiment

    Returns
    -------
    ExperimentSummary
        The summary; all counts are independent of the order of reports
    """
    reports = sorted(reports, key=lambda report: report.trial_index)
    counted = [report for report in reports if not report.degenerate]
    full_decode_successes = None
    if config.run.full_decode:
        full_decode_successes = sum(1 for report in counted if report.full_decode_correct)
    mean_rounds = 0.0
    if len(counted) > 0:
        mean_rounds = sum(report.iterations for report in counted) / len(counted)
    return ExperimentSummary(
        config=config,
        trials=len(reports),
        successes=sum(1 for report in counted if report.support_correct),
        degenerate=len(reports) - len(counted),
        resamples=sum(report.resamples for report in reports),
        full_decode_successes=full_decode_successes,
        mean_rounds=mean_rounds,
        wall_ms=wall_ms,
        outcome_counts=dict(Counter(report.outcome for report in reports)),
        estimates=analytic_estimates(config),
        reports=reports,
    )


def experiment_stem(config: Config) -> str:
    """A file name stem describing the experiment parameters"""
    code = config.code
    stem = f"{config.decoder.algorithm}_q{code.q}_m{code.m}_n{code.n}_k{code.k}_r{code.r}_d{code.d}_c{code.c}"
    t = effective_t(config)
    if t is not None:
        stem += f"_t{t}"
    return stem


def format_summary(summary: ExperimentSummary, output: str, verbose: bool = False) -> str:
    """The summary as json text or as a single-row csv table"""
    if output == "csv":
        return summaries_table([summary]).write_csv()
    return dumps(summary.to_dict(verbose), indent=2)


def summaries_table(summaries: list[ExperimentSummary]) -> DataFrame:
    """One row per summary"""
    rows = [summary.to_row() for summary in summaries]
    return DataFrame(rows).select(list(CSV_COLUMNS))


def trials_table(summary: ExperimentSummary) -> DataFrame:
    """One row per trial"""
    return DataFrame([report.to_row() for report in summary.reports])


def write_summary(summary: ExperimentSummary, ws: Workspace) -> Path:
    """Write the summary (and the per-trial table when verbose) to the workspace

    Returns
    -------
    Path
        The summary path
    """
    output = summary.config.run.output
    verbose = summary.config.run.verbose
    stem = experiment_stem(summary.config)
    path = ws.get_summary_path(stem, output)
    with open(path, "w") as summary_file:
        summary_file.write(format_summary(summary, output, verbose))
    if verbose:
        trials_table(summary).write_csv(ws.get_trials_path(stem))
    return path
