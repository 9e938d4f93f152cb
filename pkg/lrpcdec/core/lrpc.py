"""LRPC codes, rank errors, syndromes and coordinate recovery

An LRPC code is given by a parity-check matrix H whose entries all lie in a
small d-dimensional F_q-subspace A of F_{q^m}. A rank error e has its components
in an r-dimensional support E; its syndrome s = e·H^T has components in the
product space A.E. Once E is known, e is found by solving a linear system over
F_q in n·r unknowns.
"""

from .constants import MAX_CODE_RESAMPLES
from .errors import CodeGenerationError, DecoderError, SubspaceError
from .field import (
    FieldParams,
    coefficients,
    encode,
    from_coefficients,
    rank_weight,
)
from .linalg import rank, solve
from .subspace import (
    Subspace,
    from_vectors,
    product_space,
    random_subspace,
    span,
)

from dataclasses import dataclass
from enum import Enum
import galois
import numpy as np


@dataclass(frozen=True)
class LrpcCode:
    """An [n, k] LRPC code over F_{q^m} of dual rank weight d

    Attributes
    ----------
    params: FieldParams
        The field
    n: int
        Code length
    k: int
        Code dimension
    d: int
        Dual rank weight, the dimension of the parity-check support
    support: Subspace
        The parity-check support A
    H: galois.FieldArray
        The (n - k) x n parity-check matrix, every entry in A, rank n - k
    """

    params: FieldParams
    n: int
    k: int
    d: int
    support: Subspace
    H: galois.FieldArray

    @property
    def redundancy(self) -> int:
        return self.n - self.k


@dataclass(frozen=True)
class RankError:
    """An error vector e = beta · C_e of rank r

    Attributes
    ----------
    support: Subspace
        The error support E
    beta: galois.FieldArray
        An ordered basis of E (r elements)
    coordinates: ndarray
        The r x n matrix C_e over F_q
    vector: galois.FieldArray
        The length-n error vector
    """

    support: Subspace
    beta: galois.FieldArray
    coordinates: np.ndarray
    vector: galois.FieldArray

    @property
    def rank(self) -> int:
        return self.support.dim


@dataclass(frozen=True)
class Syndrome:
    """A syndrome s = e·H^T and its F_q-span S

    Attributes
    ----------
    values: galois.FieldArray
        The n - k syndrome components
    support: Subspace
        The syndrome support S
    """

    values: galois.FieldArray
    support: Subspace


@dataclass(frozen=True)
class PlantedInstance:
    """Parity-check support, error support and a syndrome support S ⊆ A.E

    Attributes
    ----------
    parity_support: Subspace
        A, of dimension d
    error_support: Subspace
        E, of dimension r
    syndrome_support: Subspace
        S, a uniformly random subspace of A.E of dimension rd - c
    product: Subspace
        A.E, of dimension rd
    """

    parity_support: Subspace
    error_support: Subspace
    syndrome_support: Subspace
    product: Subspace


class SolveStatus(Enum):
    """Result classes of the coordinate solver

    Attributes
    ----------
    UNIQUE: str
        Exactly one error vector with the given support matches the syndrome
    NO_SOLUTION: str
        No error vector with the given support matches the syndrome
    AMBIGUOUS: str
        The solution space has positive dimension
    """

    UNIQUE = "unique"
    NO_SOLUTION = "no_solution"
    AMBIGUOUS = "ambiguous"

    def __str__(self) -> str:
        match self:
            case SolveStatus.UNIQUE:
                return "Unique solution"
            case SolveStatus.NO_SOLUTION:
                return "No solution"
            case _:
                return "Ambiguous"


@dataclass(frozen=True)
class CoordinateSolution:
    """Output of recover_coordinates

    Attributes
    ----------
    status: SolveStatus
        Unique, no solution, or ambiguous
    error: RankError | None
        The recovered error (a particular solution when ambiguous), None when the
        system is inconsistent
    nullity: int
        Dimension of the solution space of the homogeneous system
    """

    status: SolveStatus
    error: RankError | None
    nullity: int


def _random_rows_in(
    space: Subspace, shape: tuple[int, ...], rng: np.random.Generator
) -> np.ndarray:
    """Coefficient vectors of uniform elements of a subspace, shape + (m,)"""
    coords = rng.integers(0, space.params.q, size=shape + (space.dim,))
    return (coords @ space.basis) % space.params.q


def gen_code(
    params: FieldParams, n: int, k: int, d: int, rng: np.random.Generator
) -> LrpcCode:
    """Draw a random LRPC code

    A is a uniform d-dimensional subspace; the entries of H are uniform over A.
    H is redrawn as a whole until it has rank n - k over F_{q^m}.

    Parameters
    ----------
    params: FieldParams
        The field
    n: int
        Code length
    k: int
        Code dimension, 0 < k < n
    d: int
        Dual rank weight, d <= m
    rng: numpy.random.Generator
        Random source

    Returns
    -------
    LrpcCode
        The code

    Raises
    ------
    CodeGenerationError
        If the parameters are invalid or H stays rank deficient after
        MAX_CODE_RESAMPLES draws
    """
    if not 0 < k < n:
        raise CodeGenerationError(f"Need 0 < k < n, got n = {n}, k = {k}")
    if not 1 <= d <= params.m:
        raise CodeGenerationError(f"Need 1 <= d <= m = {params.m}, got d = {d}")
    support = random_subspace(params, d, rng)
    for _ in range(MAX_CODE_RESAMPLES):
        H = from_coefficients(params, _random_rows_in(support, (n - k, n), rng))
        if int(np.linalg.matrix_rank(H)) == n - k:
            return LrpcCode(params, n, k, d, support, H)
    raise CodeGenerationError(
        f"Parity-check matrix stayed rank deficient after {MAX_CODE_RESAMPLES} draws"
    )


def _random_full_rank(q: int, rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        matrix = rng.integers(0, q, size=(rows, cols))
        if rank(matrix, q) == rows:
            return matrix


def gen_error(
    params: FieldParams, n: int, r: int, rng: np.random.Generator
) -> RankError:
    """Draw a random error of rank exactly r

    E is a uniform r-dimensional subspace, beta its canonical basis and C_e a
    uniform rank-r matrix in F_q^{r x n}, so e = beta · C_e has support E.

    Raises
    ------
    CodeGenerationError
        If r > n or r > m
    """
    if r < 0 or r > n or r > params.m:
        raise CodeGenerationError(
            f"Error rank must satisfy 0 <= r <= min(n, m), got r = {r}, n = {n}, m = {params.m}"
        )
    support = random_subspace(params, r, rng)
    if r == 0:
        coordinates = np.zeros((0, n), dtype=np.int64)
        vector = params.field.Zeros(n)
    else:
        coordinates = _random_full_rank(params.q, r, n, rng)
        vector = from_coefficients(
            params, (coordinates.T @ support.basis) % params.q
        )
    return RankError(support, support.basis_elements, coordinates, vector)


def syndrome(code: LrpcCode, error: RankError | galois.FieldArray) -> Syndrome:
    """The syndrome s = e·H^T, i.e. s_i = sum_j e_j h_ij

    Raises
    ------
    DecoderError
        If e does not have length n or lives in another field
    """
    vector = error.vector if isinstance(error, RankError) else error
    if vector.shape != (code.n,):
        raise DecoderError(
            f"Error vector must have length n = {code.n}, got shape {vector.shape}"
        )
    if type(vector) is not type(code.H):
        raise DecoderError("Error vector and parity-check matrix use different fields")
    values = code.H @ vector
    return Syndrome(values, span(code.params, values))


def plant_instance(
    params: FieldParams,
    r: int,
    d: int,
    c: int,
    rng: np.random.Generator,
    max_attempts: int = 1000,
) -> PlantedInstance:
    """Draw A, E with dim(A.E) = rd and a random S ⊆ A.E of codimension c

    This is the setting in which the support recovery bounds are stated; it
    skips code construction entirely.

    Raises
    ------
    CodeGenerationError
        If rd > m, c is out of range, or dim(A.E) = rd is not reached within
        max_attempts draws
    """
    if r * d > params.m:
        raise CodeGenerationError(f"Need rd <= m, got rd = {r * d}, m = {params.m}")
    if not 0 <= c <= r * d:
        raise CodeGenerationError(f"Need 0 <= c <= rd, got c = {c}")
    for _ in range(max_attempts):
        parity_support = random_subspace(params, d, rng)
        error_support = random_subspace(params, r, rng)
        product = product_space(parity_support, error_support)
        if product.dim == r * d:
            syndrome_support = random_subspace(params, r * d - c, rng, ambient=product)
            return PlantedInstance(
                parity_support, error_support, syndrome_support, product
            )
    raise CodeGenerationError(f"dim(A.E) = rd not reached in {max_attempts} draws")


def recover_coordinates(
    code: LrpcCode, syn: Syndrome, support: Subspace
) -> CoordinateSolution:
    """Recover e from its syndrome once its support is known

    Writing e = beta · C with beta the canonical basis of the support, every
    syndrome component s_l = sum_{i,j} C_ij (beta_i h_lj) expands over the
    polynomial basis 1, X, ..., X^{m-1} into m equations over F_q. The
    (n - k)m x nr system is solved for the entries of C.

    Parameters
    ----------
    code: LrpcCode
        The code
    syn: Syndrome
        The syndrome to explain
    support: Subspace
        The candidate error support

    Returns
    -------
    CoordinateSolution
        Unique, NoSolution or Ambiguous, with the recovered error when one exists

    Raises
    ------
    DecoderError
        On field or length mismatches
    """
    params = code.params
    if support.params != params:
        raise DecoderError("Support and code use different fields")
    if syn.values.shape != (code.redundancy,):
        raise DecoderError(
            f"Syndrome must have length n - k = {code.redundancy}, got {syn.values.shape}"
        )
    r = support.dim
    n = code.n
    if r == 0:
        if np.any(encode(syn.values)):
            return CoordinateSolution(SolveStatus.NO_SOLUTION, None, 0)
        zero_error = RankError(
            support,
            support.basis_elements,
            np.zeros((0, n), dtype=np.int64),
            params.field.Zeros(n),
        )
        return CoordinateSolution(SolveStatus.UNIQUE, zero_error, 0)

    beta = support.basis_elements
    # products[l, j, i] = beta_i * h_lj
    products = code.H[:, :, None] * beta[None, None, :]
    vectors = coefficients(products)  # (n - k, n, r, m)
    # rows indexed by (l, coefficient u), columns by (i, j)
    system = vectors.transpose(0, 3, 2, 1).reshape(code.redundancy * params.m, r * n)
    rhs = coefficients(syn.values).reshape(code.redundancy * params.m)
    solution, nullity = solve(system, rhs, params.q)
    if solution is None:
        return CoordinateSolution(SolveStatus.NO_SOLUTION, None, nullity)
    coordinates = solution.reshape(r, n)
    vector = from_coefficients(params, (coordinates.T @ support.basis) % params.q)
    recovered = RankError(span(params, vector), beta, coordinates, vector)
    status = SolveStatus.UNIQUE if nullity == 0 else SolveStatus.AMBIGUOUS
    return CoordinateSolution(status, recovered, nullity)


def verify_solution(code: LrpcCode, syn: Syndrome, error: RankError, r: int) -> bool:
    """Whether e·H^T = s and w_R(e) <= r"""
    if not np.array_equal(encode(code.H @ error.vector), encode(syn.values)):
        return False
    return rank_weight(error.vector) <= r


def errors_equal(first: RankError, second: RankError) -> bool:
    """Whether two errors are the same vector"""
    return np.array_equal(encode(first.vector), encode(second.vector))


def support_from_vectors(params: FieldParams, vectors: np.ndarray) -> Subspace:
    """Subspace spanned by raw coefficient rows, validated against the field"""
    vectors = np.asarray(vectors, dtype=np.int64)
    if vectors.size and (vectors.min() < 0 or vectors.max() >= params.q):
        raise SubspaceError(f"Coefficients must lie in [0, {params.q})")
    return from_vectors(params, vectors)
