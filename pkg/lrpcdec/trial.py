"""A single Monte-Carlo trial

Every trial owns an independent random stream derived from the experiment seed
and its index:

    key = splitmix64(seed XOR splitmix64(trial_index))
    rng = numpy.random.default_rng(key)

where splitmix64(x) works on 64-bit unsigned integers as

    z = x + 0x9E3779B97F4A7C15
    z = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z XOR (z >> 27)) * 0x94D049BB133111EB
    return z XOR (z >> 31)

so results do not depend on which process runs which trial.
"""

from .core.config import Config
from .core.field import FieldParams, make_field
from .core.lrpc import (
    LrpcCode,
    RankError,
    SolveStatus,
    Syndrome,
    errors_equal,
    gen_code,
    gen_error,
    recover_coordinates,
    syndrome,
    verify_solution,
)
from .core.subspace import product_space
from .decoders.basic import basic_recover
from .decoders.intersect import intersect_recover
from .decoders.multiset import multiset_recover
from .decoders.outcome import RecoveryOutcome, RecoveryStatus

from dataclasses import dataclass, asdict
from time import perf_counter
from typing import Any
import numpy as np

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One step of the SplitMix64 output function on a 64-bit unsigned value"""
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(seed: int, trial_index: int) -> int:
    return splitmix64((seed & MASK64) ^ splitmix64(trial_index))


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    return np.random.default_rng(trial_seed(seed, trial_index))


@dataclass
class TrialReport:
    """The result of one trial

    Attributes
    ----------
    trial_index: int
        The trial index
    outcome: str
        The outcome label, e.g. success, wrong_support or failure:stray. Degenerate
        trials are not decoded and carry the label degenerate
    support_correct: bool
        Whether the recovered support equals the planted one
    full_decode_correct: bool | None
        Whether coordinate recovery returned the planted error, None when not run
    degenerate: bool
        Whether the resample budget ran out before a usable instance was drawn
    resamples: int
        Number of instances redrawn
    syndrome_dim: int
        dim(S)
    c_actual: int
        rd - dim(S)
    iterations: int
        Rounds run by the decoder
    candidates_examined: int
        Distinct candidates examined by the decoder
    elapsed_ms: float
        Wall time of the trial
    """

    trial_index: int
    outcome: str
    support_correct: bool
    full_decode_correct: bool | None
    degenerate: bool
    resamples: int
    syndrome_dim: int
    c_actual: int
    iterations: int
    candidates_examined: int
    elapsed_ms: float

    def to_row(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class TrialInstance:
    """A drawn code, error and syndrome, with the number of redraws it took"""

    code: LrpcCode
    error: RankError
    syndrome: Syndrome
    resamples: int
    degenerate: bool


def draw_instance(
    config: Config, params: FieldParams, rng: np.random.Generator
) -> TrialInstance:
    """Draw (code, error) pairs until dim(A.E) = rd

    When resample_syndrome is set and n - k <= rd, dim(S) = n - k is required too.
    After max_resamples redraws the last draw is returned flagged degenerate.
    """
    code_params = config.code
    n, k, r, d = code_params.n, code_params.k, code_params.r, code_params.d
    rd = r * d
    need_full_syndrome = config.run.resample_syndrome and n - k <= rd
    resamples = 0
    while True:
        code = gen_code(params, n, k, d, rng)
        error = gen_error(params, n, r, rng)
        usable = product_space(code.support, error.support).dim == rd
        syn = syndrome(code, error)
        if usable and need_full_syndrome:
            usable = syn.support.dim == n - k
        if usable:
            return TrialInstance(code, error, syn, resamples, False)
        if resamples == config.run.max_resamples:
            return TrialInstance(code, error, syn, resamples, True)
        resamples += 1


def decode_support(
    config: Config, instance: TrialInstance, rng: np.random.Generator
) -> RecoveryOutcome:
    """Dispatch the configured support recovery decoder"""
    code_params = config.code
    decoder = config.decoder
    r, d = code_params.r, code_params.d
    S = instance.syndrome.support
    A = instance.code.support
    c_actual = r * d - S.dim
    match decoder.algorithm:
        case "basic":
            return basic_recover(S, A, r)
        case "multiset":
            return multiset_recover(
                S,
                A,
                r,
                d,
                c_actual,
                faithful_guard=decoder.faithful_guard,
                candidate_cap=decoder.candidate_cap,
                enumeration_cap=decoder.enumeration_cap,
                rng=rng if decoder.random_filter else None,
            )
        case _:
            return intersect_recover(
                S,
                A,
                r,
                d,
                c_actual,
                rng,
                t=decoder.t,
                max_rounds=decoder.max_rounds,
                skip_repeated=decoder.skip_repeated,
            )


def full_decode(instance: TrialInstance, outcome: RecoveryOutcome, r: int) -> bool:
    """Whether coordinate recovery on the recovered support returns the planted error

    Only a unique solution counts; it is re-checked against the syndrome and the
    rank bound.
    """
    if outcome.support is None or outcome.status == RecoveryStatus.FAILURE:
        return False
    solution = recover_coordinates(instance.code, instance.syndrome, outcome.support)
    if solution.status != SolveStatus.UNIQUE or solution.error is None:
        return False
    if not verify_solution(instance.code, instance.syndrome, solution.error, r):
        return False
    return errors_equal(solution.error, instance.error)


def run_trial(
    config: Config, trial_index: int, params: FieldParams | None = None
) -> TrialReport:
    """Run one trial of a resolved configuration

    Parameters
    ----------
    config: Config
        A configuration returned by resolve_config
    trial_index: int
        The trial index, which fixes the random stream
    params: FieldParams | None
        The field, built from the configuration when None

    Returns
    -------
    TrialReport
        The trial's result
    """
    start = perf_counter()
    code_params = config.code
    if params is None:
        params = make_field(code_params.q, code_params.m)
    rng = trial_rng(config.run.seed, trial_index)
    instance = draw_instance(config, params, rng)
    syndrome_dim = instance.syndrome.support.dim
    c_actual = code_params.r * code_params.d - syndrome_dim

    if instance.degenerate:
        return TrialReport(
            trial_index,
            "degenerate",
            False,
            None,
            True,
            instance.resamples,
            syndrome_dim,
            c_actual,
            0,
            0,
            (perf_counter() - start) * 1000.0,
        )

    outcome = decode_support(config, instance, rng).checked_against(
        instance.error.support
    )
    decoded = None
    if config.run.full_decode:
        decoded = full_decode(instance, outcome, code_params.r)
    return TrialReport(
        trial_index,
        outcome.label(),
        outcome.status == RecoveryStatus.SUCCESS,
        decoded,
        False,
        instance.resamples,
        syndrome_dim,
        c_actual,
        outcome.iterations,
        outcome.candidates_examined,
        (perf_counter() - start) * 1000.0,
    )
