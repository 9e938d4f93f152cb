from lrpcdec.core.config import resolve_config
from lrpcdec.core.field import make_field
from lrpcdec.core.lrpc import gen_code, gen_error, syndrome
from lrpcdec.core.subspace import product_space, random_subspace
from lrpcdec.decoders.outcome import FailureReason, RecoveryOutcome
from lrpcdec.trial import (
    MASK64,
    TrialInstance,
    decode_support,
    draw_instance,
    full_decode,
    run_trial,
    splitmix64,
    trial_rng,
    trial_seed,
)

from dataclasses import replace
import numpy as np


def _without_timing(report) -> dict:
    row = report.to_row()
    row.pop("elapsed_ms")
    return row


def test_splitmix64_reference_value():
    # First output of a SplitMix64 generator started from state 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_trial_seeds_are_64_bit_and_distinct():
    seeds = {trial_seed(7, idx) for idx in range(1000)}
    assert len(seeds) == 1000
    assert all(0 <= seed <= MASK64 for seed in seeds)
    assert trial_seed(2**64 - 1, 3) == splitmix64((2**64 - 1) ^ splitmix64(3))


def test_trial_rng_is_reproducible():
    first = trial_rng(11, 4).integers(0, 2**32, size=8)
    second = trial_rng(11, 4).integers(0, 2**32, size=8)
    other = trial_rng(11, 5).integers(0, 2**32, size=8)
    assert np.array_equal(first, second)
    assert not np.array_equal(first, other)


def test_draw_instance(small_config):
    config = resolve_config(small_config)
    params = make_field(2, 16)
    instance = draw_instance(config, params, trial_rng(0, 0))
    assert not instance.degenerate
    assert product_space(instance.code.support, instance.error.support).dim == 6
    # n - k = rd - c = 5 <= rd, so the syndrome must fill n - k dimensions
    assert instance.syndrome.support.dim == 5


def test_run_trial_is_deterministic(small_config):
    config = resolve_config(small_config)
    first = run_trial(config, 3)
    second = run_trial(config, 3, make_field(2, 16))
    assert _without_timing(first) == _without_timing(second)
    assert first.trial_index == 3
    assert first.c_actual == 1
    assert first.syndrome_dim == 5
    assert first.full_decode_correct is None


def test_trial_independent_of_order(small_config):
    config = resolve_config(small_config)
    forward = [_without_timing(run_trial(config, idx)) for idx in range(4)]
    backward = [_without_timing(run_trial(config, idx)) for idx in reversed(range(4))]
    assert forward == backward[::-1]


def test_full_decode_after_success(small_config):
    config = resolve_config(small_config)
    config = replace(config, run=replace(config.run, full_decode=True))
    for idx in range(6):
        report = run_trial(config, idx)
        if report.support_correct:
            assert report.full_decode_correct


def test_full_decode(f2_16, rng):
    code = gen_code(f2_16, 6, 1, 3, rng)
    error = gen_error(f2_16, 6, 2, rng)
    instance = TrialInstance(code, error, syndrome(code, error), 0, False)
    assert full_decode(instance, RecoveryOutcome.success(error.support), 2)
    budget = RecoveryOutcome.failure(FailureReason.BUDGET, error.support)
    assert not full_decode(instance, budget, 2)
    wrong = RecoveryOutcome.success(random_subspace(f2_16, 2, rng))
    assert not full_decode(instance, wrong, 2)


def test_decoder_dispatch(small_config):
    config = resolve_config(small_config)
    params = make_field(2, 16)
    instance = draw_instance(config, params, trial_rng(0, 1))
    labels = {}
    for algorithm in ("basic", "multiset", "intersect"):
        # t = 1 intersects nothing, the single shifted space has dim rd - c > r
        local = replace(config, decoder=replace(config.decoder, algorithm=algorithm, t=1))
        outcome = decode_support(local, instance, trial_rng(0, 1))
        labels[algorithm] = outcome.checked_against(instance.error.support).label()
    # dim(S) = rd - 1 leaves the basic intersection short of E
    assert labels["basic"] == "failure:dimension"
    assert labels["multiset"] != "failure:guard"
    assert labels["intersect"] == "failure:stray"
