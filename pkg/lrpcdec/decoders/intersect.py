from .estimates import default_t
from .outcome import FailureReason, RecoveryOutcome
from ..core.constants import DEFAULT_MAX_ROUNDS
from ..core.errors import DecoderError
from ..core.field import from_coefficients
from ..core.lrpc_log import lrpc_debug
from ..core.subspace import (
    Subspace,
    intersect,
    shift_inverse,
    subspace_sum,
    zero_subspace,
)

import numpy as np


class ShiftedSpaceCache:
    """Lazily computed shifted syndrome spaces S·a^-1, keyed by the coordinates of a

    Attributes
    ----------
    S: Subspace
        The syndrome support
    A: Subspace
        The parity-check support

    Methods
    -------
    ShiftedSpaceCache(S: Subspace, A: Subspace)
        Construct an empty cache
    get(coords: tuple[int, ...]) -> Subspace
        S·a^-1 for a = sum coords_i alpha_i
    """

    def __init__(self, S: Subspace, A: Subspace):
        self.S = S
        self.A = A
        self._spaces: dict[tuple[int, ...], Subspace] = {}

    def get(self, coords: tuple[int, ...]) -> Subspace:
        space = self._spaces.get(coords)
        if space is None:
            q = self.A.params.q
            vector = (np.asarray(coords, dtype=np.int64) @ self.A.basis) % q
            a = from_coefficients(self.A.params, vector)
            space = shift_inverse(self.S, a)
            self._spaces[coords] = space
        return space

    def __len__(self) -> int:
        return len(self._spaces)


def sample_distinct_nonzero(
    q: int, d: int, t: int, rng: np.random.Generator
) -> tuple[tuple[int, ...], ...]:
    """t distinct nonzero coordinate vectors of length d, by rejection

    Returns
    -------
    tuple[tuple[int, ...], ...]
        The coordinate vectors in the order they were drawn
    """
    chosen: list[tuple[int, ...]] = []
    while len(chosen) < t:
        coords = tuple(int(v) for v in rng.integers(0, q, size=d))
        if any(coords) and coords not in chosen:
            chosen.append(coords)
    return tuple(chosen)


def intersect_recover(
    S: Subspace,
    A: Subspace,
    r: int,
    d: int,
    c: int,
    rng: np.random.Generator,
    t: int | None = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    skip_repeated: bool = True,
) -> RecoveryOutcome:
    """Recover E by accumulating t-fold intersections of shifted syndrome spaces

    Every round draws t distinct nonzero elements a_1, ..., a_t of A and adds
    S·a_1^-1 ∩ ... ∩ S·a_t^-1 to the accumulated space. Each such intersection
    meets E in dimension at least r - tc and rarely holds anything outside E once
    (t - 1)m > t·rd - r.

    Parameters
    ----------
    S: Subspace
        The syndrome support
    A: Subspace
        The parity-check support
    r: int
        The target rank
    d: int
        Dimension of A
    c: int
        Codimension of S in A.E
    rng: numpy.random.Generator
        Random source for the choice of shifts
    t: int | None
        Number of shifted spaces per round. If None, the smallest power of q that
        is at least r / c
    max_rounds: int
        Round budget
    skip_repeated: bool
        If true, a round whose set of shifts was already used adds nothing and is
        skipped (it still counts toward max_rounds)

    Returns
    -------
    RecoveryOutcome
        Success when the accumulated space reaches dimension r; failure with reason
        stray when it overshoots, budget when the rounds run out and guard when
        rd - dim(S) >= d

    Raises
    ------
    DecoderError
        If c = 0 and t is not given, t exceeds q^d - 1, or the inputs are
        inconsistent
    """
    if S.params != A.params:
        raise DecoderError("Syndrome and parity-check supports use different fields")
    if A.dim != d:
        raise DecoderError(f"The parity-check support has dimension {A.dim}, expected d = {d}")
    if r == 0:
        return RecoveryOutcome.success(zero_subspace(S.params))
    if r * d - S.dim >= d:
        return RecoveryOutcome.failure(FailureReason.GUARD)
    q = S.params.q
    if t is None:
        if c <= 0:
            raise DecoderError(
                "The default t needs c >= 1; use basic_recover when the syndrome fills A.E"
            )
        t = default_t(q, r, c)
    if t < 1 or t > A.cardinality - 1:
        raise DecoderError(f"t = {t} must lie in [1, q^d - 1 = {A.cardinality - 1}]")

    cache = ShiftedSpaceCache(S, A)
    used: set[frozenset[tuple[int, ...]]] = set()
    accumulated = zero_subspace(S.params)
    round_dims: list[int] = []
    for round_index in range(1, max_rounds + 1):
        shifts = sample_distinct_nonzero(q, d, t, rng)
        key = frozenset(shifts)
        if skip_repeated and key in used:
            continue
        used.add(key)

        joint = cache.get(shifts[0])
        for coords in shifts[1:]:
            if joint.dim == 0:
                break
            joint = intersect(joint, cache.get(coords))
        round_dims.append(joint.dim)
        accumulated = subspace_sum(accumulated, joint)

        if accumulated.dim > r:
            lrpc_debug(__name__, f"Stray elements after {round_index} rounds")
            return RecoveryOutcome.failure(
                FailureReason.STRAY,
                accumulated,
                iterations=round_index,
                round_dims=tuple(round_dims),
            )
        if accumulated.dim == r:
            return RecoveryOutcome.success(
                accumulated, iterations=round_index, round_dims=tuple(round_dims)
            )

    lrpc_debug(__name__, f"Round budget of {max_rounds} exhausted at dim {accumulated.dim}")
    return RecoveryOutcome.failure(
        FailureReason.BUDGET,
        accumulated,
        iterations=max_rounds,
        round_dims=tuple(round_dims),
    )
