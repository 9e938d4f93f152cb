from .outcome import FailureReason, RecoveryOutcome
from ..core.errors import DecoderError
from ..core.lrpc_log import lrpc_debug
from ..core.subspace import Subspace, intersect, shift_inverse


def basic_recover(S: Subspace, A: Subspace, r: int) -> RecoveryOutcome:
    """The original LRPC support recovery

    Intersects the shifted syndrome spaces S·alpha_i^-1 over a basis alpha_1, ...,
    alpha_d of A. Meant for the regime dim(S) = rd, where the intersection is E
    with high probability.

    Parameters
    ----------
    S: Subspace
        The syndrome support
    A: Subspace
        The parity-check support
    r: int
        The target rank

    Returns
    -------
    RecoveryOutcome
        Success iff the intersection has dimension r

    Raises
    ------
    DecoderError
        If A is the zero subspace or S and A live in different fields
    """
    if A.dim == 0:
        raise DecoderError("The parity-check support must not be the zero subspace")
    if S.params != A.params:
        raise DecoderError("Syndrome and parity-check supports use different fields")

    alphas = A.basis_elements
    recovered = shift_inverse(S, alphas[0])
    for alpha in alphas[1:]:
        if recovered.dim == 0:
            break
        recovered = intersect(recovered, shift_inverse(S, alpha))

    lrpc_debug(__name__, f"Basic recovery: dim(S) = {S.dim}, recovered dim = {recovered.dim}")
    if recovered.dim == r:
        return RecoveryOutcome.success(recovered)
    return RecoveryOutcome.failure(FailureReason.DIMENSION, recovered)
