"""Support recovery from the multiplicities of the multiset Z

Z is the union with multiplicity of the shifted spaces S·a^-1 over all nonzero a
in A. The multiplicity of a nonzero x in Z equals the number of nonzero elements
of S·x^-1 ∩ A, and that of 0 is q^d - 1. Elements of E have multiplicity at least
q^(d - c) - 1, generic elements of Z far less.

Z itself is never built by the decoder: the distinct candidates come from
enumerating every S·a^-1 once, and their multiplicities from the closed form. The
brute force multiset is kept for testing.
"""

from .outcome import FailureReason, RecoveryOutcome
from ..core.constants import DEFAULT_CANDIDATE_CAP, DEFAULT_ENUMERATION_CAP
from ..core.errors import DecoderError, ResourceLimitError
from ..core.field import coefficients, encode, inv
from ..core.linalg import batch_rank, reduce_vectors
from ..core.lrpc_log import lrpc_debug
from ..core.subspace import Subspace, enumerate_subspace, span, zero_subspace

import galois
import numpy as np

# Candidates are ranked in chunks to bound the size of the residue tensor
RANK_CHUNK = 1 << 14


def intersection_dims(xs: galois.FieldArray, S: Subspace, A: Subspace) -> np.ndarray:
    """dim(S·x^-1 ∩ A) for a batch of elements, d for x = 0

    a is in S·x^-1 exactly when a·x is in S, so the dimension is d minus the rank
    of the residues of x·alpha_1, ..., x·alpha_d modulo S.

    Parameters
    ----------
    xs: galois.FieldArray
        The elements (any shape, flattened)
    S: Subspace
        The syndrome support
    A: Subspace
        The parity-check support

    Returns
    -------
    ndarray
        One dimension per element
    """
    xs = xs.reshape(-1)
    q = S.params.q
    dims = np.empty(xs.shape[0], dtype=np.int64)
    alphas = A.basis_elements
    for start in range(0, xs.shape[0], RANK_CHUNK):
        chunk = xs[start : start + RANK_CHUNK]
        products = coefficients(chunk[:, None] * alphas[None, :])
        residues = np.ascontiguousarray(reduce_vectors(products, S.basis, S.pivots, q))
        dims[start : start + RANK_CHUNK] = A.dim - batch_rank(residues, q)
    return dims


def multiplicities(xs: galois.FieldArray, S: Subspace, A: Subspace) -> np.ndarray:
    """Multiplicity in Z of a batch of elements, q^dim(S·x^-1 ∩ A) - 1"""
    return S.params.q ** intersection_dims(xs, S, A) - 1


def multiplicity(x: galois.FieldArray, S: Subspace, A: Subspace) -> int:
    """Multiplicity of a single element in Z

    Parameters
    ----------
    x: galois.FieldArray
        The element, zero allowed
    S: Subspace
        The syndrome support
    A: Subspace
        The parity-check support

    Returns
    -------
    int
        q^dim(S·x^-1 ∩ A) - 1, or q^d - 1 for x = 0
    """
    dim = int(intersection_dims(x, S, A)[0])
    return S.params.q**dim - 1


def brute_force_multiplicities(
    S: Subspace, A: Subspace, cap: int = DEFAULT_CANDIDATE_CAP
) -> tuple[np.ndarray, np.ndarray]:
    """Materialize Z and count every element

    Parameters
    ----------
    S: Subspace
        The syndrome support
    A: Subspace
        The parity-check support
    cap: int
        Maximum size of Z

    Returns
    -------
    tuple[ndarray, ndarray]
        The distinct encodings in Z (ascending) and their multiplicities

    Raises
    ------
    ResourceLimitError
        If |Z| = (q^d - 1) q^dim(S) exceeds cap
    """
    size = (A.cardinality - 1) * S.cardinality
    if size > cap:
        raise ResourceLimitError(f"The multiset has {size} elements, above the cap of {cap}")
    s_elements = enumerate_subspace(S, cap)
    a_inverses = inv(enumerate_subspace(A, cap)[1:])
    z = s_elements[None, :] * a_inverses[:, None]
    return np.unique(encode(z).reshape(-1), return_counts=True)


def _check_inputs(S: Subspace, A: Subspace, d: int):
    if S.params != A.params:
        raise DecoderError("Syndrome and parity-check supports use different fields")
    if A.dim != d:
        raise DecoderError(f"The parity-check support has dimension {A.dim}, expected d = {d}")


def candidate_set(
    S: Subspace,
    A: Subspace,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> np.ndarray:
    """Distinct elements of Z, as ascending encodings"""
    s_elements = enumerate_subspace(S, enumeration_cap)
    a_elements = enumerate_subspace(A, enumeration_cap)[1:]
    candidates = np.zeros(0, dtype=np.int64)
    for a_inverse in inv(a_elements):
        candidates = np.union1d(candidates, encode(s_elements * a_inverse))
    return candidates


def high_multiplicity_set(
    S: Subspace,
    A: Subspace,
    d: int,
    c: int,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> tuple[np.ndarray, int]:
    """The candidates whose multiplicity reaches q^(d - c) - 1, before filtering

    Parameters
    ----------
    S: Subspace
        The syndrome support
    A: Subspace
        The parity-check support
    d: int
        Dimension of A
    c: int
        Codimension of S in A.E
    candidate_cap: int
        Maximum size of Z
    enumeration_cap: int
        Maximum size of a single enumerated subspace

    Returns
    -------
    tuple[ndarray, int]
        Ascending encodings of the kept candidates, and the number of distinct
        candidates examined

    Raises
    ------
    ResourceLimitError
        If (q^d - 1) q^dim(S) exceeds candidate_cap
    """
    _check_inputs(S, A, d)
    size = (A.cardinality - 1) * S.cardinality
    if size > candidate_cap:
        raise ResourceLimitError(
            f"The multiset has {size} elements, above the candidate cap of {candidate_cap}"
        )
    candidates = candidate_set(S, A, enumeration_cap)
    dims = intersection_dims(S.params.field(candidates), S, A)
    # q^dim - 1 >= q^(d - c) - 1 iff dim >= d - c
    return candidates[dims >= d - c], int(candidates.shape[0])


def filter_candidates(
    field: type[galois.FieldArray],
    candidates: np.ndarray,
    target: int,
    rng: np.random.Generator | None = None,
) -> np.ndarray | None:
    """Shrink a candidate set by intersecting it with its own translates

    For x in E, E ⊆ (Ẽ + x) ∩ Ẽ. A choice x is taken when the intersection is
    strictly smaller but still holds at least target elements; the search then
    restarts on the smaller set.

    Parameters
    ----------
    field: type[galois.FieldArray]
        The field the encodings belong to
    candidates: ndarray
        Ascending encodings
    target: int
        q^r, the size of the support
    rng: numpy.random.Generator | None
        If given, choices are tried in random order instead of ascending order

    Returns
    -------
    ndarray | None
        The filtered encodings, None if no choice shrinks the set before it
        reaches target elements
    """
    current = candidates
    while current.shape[0] > target:
        order = current if rng is None else rng.permutation(current)
        for x in order:
            if x == 0:
                continue
            translated = encode(field(current) + field(int(x)))
            shrunk = np.intersect1d(current, translated, assume_unique=True)
            if target <= shrunk.shape[0] < current.shape[0]:
                current = shrunk
                break
        else:
            return None
    return current


def multiset_recover(
    S: Subspace,
    A: Subspace,
    r: int,
    d: int,
    c: int,
    faithful_guard: bool = False,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
    rng: np.random.Generator | None = None,
) -> RecoveryOutcome:
    """Recover E from the high multiplicity elements of Z

    Parameters
    ----------
    S: Subspace
        The syndrome support, of dimension rd - c
    A: Subspace
        The parity-check support
    r: int
        The target rank
    d: int
        Dimension of A
    c: int
        Codimension of S in A.E
    faithful_guard: bool
        If true, refuse unless c < d - 2; otherwise refuse unless c <= d - 2
    candidate_cap: int
        Maximum size of Z
    enumeration_cap: int
        Maximum size of a single enumerated subspace
    rng: numpy.random.Generator | None
        If given, the filtering loop tries candidates in random order

    Returns
    -------
    RecoveryOutcome
        The outcome; candidates_examined is the number of distinct elements of Z

    Raises
    ------
    DecoderError
        If the inputs are inconsistent
    ResourceLimitError
        If the multiset is larger than candidate_cap
    """
    _check_inputs(S, A, d)
    if r * d - S.dim != c:
        raise DecoderError(f"Codimension {c} does not match rd - dim(S) = {r * d - S.dim}")
    if r == 0:
        return RecoveryOutcome.success(zero_subspace(S.params))
    guard_ok = c < d - 2 if faithful_guard else c <= d - 2
    if not guard_ok:
        return RecoveryOutcome.failure(FailureReason.GUARD)

    kept, examined = high_multiplicity_set(S, A, d, c, candidate_cap, enumeration_cap)
    field = S.params.field
    target = S.params.q**r
    lrpc_debug(__name__, f"Multiset recovery: {examined} candidates, {kept.shape[0]} kept")
    if kept.shape[0] < target:
        return RecoveryOutcome.failure(
            FailureReason.NOT_A_SUBSPACE,
            span(S.params, field(kept)),
            candidates_examined=examined,
        )

    filtered = filter_candidates(field, kept, target, rng)
    if filtered is None:
        return RecoveryOutcome.failure(
            FailureReason.FILTER_STUCK, candidates_examined=examined
        )
    recovered = span(S.params, field(filtered))
    if recovered.dim != r:
        return RecoveryOutcome.failure(
            FailureReason.NOT_A_SUBSPACE, recovered, candidates_examined=examined
        )
    return RecoveryOutcome.success(recovered, candidates_examined=examined)
