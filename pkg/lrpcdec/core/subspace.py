"""F_q-linear subspaces of F_{q^m}

A Subspace stores the reduced row echelon form of the coefficient vectors of a
basis. The RREF is unique, so two Subspace values describe the same space iff
their basis matrices are identical; equality and hashing compare bytes.
"""

from .constants import DEFAULT_ENUMERATION_CAP
from .errors import ResourceLimitError, SubspaceError
from .field import (
    FieldParams,
    coefficients,
    encode,
    from_coefficients,
    inv,
)
from .linalg import rank, reduce_vectors, rref

import galois
import numpy as np


class Subspace:
    """An F_q-linear subspace of F_{q^m}

    Do not call the constructor with an arbitrary matrix; use span, from_vectors
    or the other operations of this module, which canonicalize the basis.

    Attributes
    ----------
    params: FieldParams
        The field the subspace lives in
    basis: ndarray
        Read-only (dim x m) int64 RREF matrix, rows are little-endian coefficient
        vectors of basis elements
    pivots: ndarray
        Pivot column of each basis row

    Methods
    -------
    Subspace(params: FieldParams, basis: ndarray, pivots: ndarray)
        Wrap an already canonical basis
    dim -> int
        The dimension
    cardinality -> int
        q^dim
    basis_elements -> galois.FieldArray
        The basis rows as field elements
    """

    __slots__ = ("params", "basis", "pivots", "_elements")

    def __init__(self, params: FieldParams, basis: np.ndarray, pivots: np.ndarray):
        self.params = params
        self.basis = basis
        self.basis.setflags(write=False)
        self.pivots = pivots
        self.pivots.setflags(write=False)
        self._elements: galois.FieldArray | None = None

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def cardinality(self) -> int:
        return self.params.q**self.dim

    @property
    def basis_elements(self) -> galois.FieldArray:
        if self._elements is None:
            self._elements = from_coefficients(self.params, self.basis)
        return self._elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.basis, other.basis)

    def __hash__(self) -> int:
        return hash((self.params, self.dim, self.basis.tobytes()))

    def __contains__(self, x: galois.FieldArray) -> bool:
        return contains(self, x)

    def __repr__(self) -> str:
        return f"Subspace(q={self.params.q}, m={self.params.m}, dim={self.dim})"


def _check_params(*spaces: Subspace):
    first = spaces[0].params
    for space in spaces[1:]:
        if space.params != first:
            raise SubspaceError("Subspaces belong to different fields")


def from_vectors(params: FieldParams, vectors: np.ndarray) -> Subspace:
    """The row space of a matrix of coefficient vectors

    Parameters
    ----------
    params: FieldParams
        The field
    vectors: ndarray
        Integer array of shape (count, m)

    Returns
    -------
    Subspace
        The canonical subspace spanned by the rows
    """
    vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, params.m)
    if vectors.shape[0] == 0:
        return zero_subspace(params)
    reduced, pivots = rref(vectors, params.q)
    return Subspace(params, reduced, pivots)


def zero_subspace(params: FieldParams) -> Subspace:
    """The zero subspace {0}"""
    return Subspace(
        params, np.zeros((0, params.m), dtype=np.int64), np.zeros(0, dtype=np.int64)
    )


def full_space(params: FieldParams) -> Subspace:
    """F_{q^m} itself"""
    return Subspace(
        params, np.eye(params.m, dtype=np.int64), np.arange(params.m, dtype=np.int64)
    )


def span(
    params: FieldParams, generators: galois.FieldArray | list[galois.FieldArray]
) -> Subspace:
    """The F_q-span of some field elements

    Parameters
    ----------
    params: FieldParams
        The field; needed because an empty generator list spans the zero space
    generators: galois.FieldArray | list[galois.FieldArray]
        Elements of F_{q^m} (any shape, flattened)

    Returns
    -------
    Subspace
        The span; the zero subspace when there are no generators
    """
    if isinstance(generators, list):
        if len(generators) == 0:
            return zero_subspace(params)
        generators = type(generators[0])(np.stack([encode(g) for g in generators]))
    if generators.size == 0:
        return zero_subspace(params)
    if type(generators) is not params.field:
        raise SubspaceError("Generators do not belong to the requested field")
    return from_vectors(params, coefficients(generators.reshape(-1)))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    """U + V, the span of the union of both bases"""
    _check_params(u, v)
    return from_vectors(u.params, np.concatenate([u.basis, v.basis], axis=0))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """U ∩ V by the Zassenhaus algorithm

    Row reduce the block matrix [[U, U], [V, 0]]. Rows whose pivot falls in the
    left half span U + V; the right halves of the remaining rows span U ∩ V.

    Parameters
    ----------
    u: Subspace
        First subspace
    v: Subspace
        Second subspace

    Returns
    -------
    Subspace
        The intersection
    """
    _check_params(u, v)
    params = u.params
    if u.dim == 0 or v.dim == 0:
        return zero_subspace(params)
    m = params.m
    block = np.zeros((u.dim + v.dim, 2 * m), dtype=np.int64)
    block[: u.dim, :m] = u.basis
    block[: u.dim, m:] = u.basis
    block[u.dim :, :m] = v.basis
    reduced, pivots = rref(block, params.q)
    return from_vectors(params, reduced[pivots >= m, m:])


def shift(space: Subspace, a: galois.FieldArray) -> Subspace:
    """The scaled space S·a = {s·a : s in S}

    Raises
    ------
    SubspaceError
        If a is zero or not in the subspace's field
    """
    if type(a) is not space.params.field:
        raise SubspaceError("Scalar does not belong to the subspace's field")
    if int(encode(a)) == 0:
        raise SubspaceError("Cannot shift a subspace by zero")
    if space.dim == 0:
        return space
    return from_vectors(space.params, coefficients(space.basis_elements * a))


def shift_inverse(space: Subspace, a: galois.FieldArray) -> Subspace:
    """S·a^{-1}, the shifted space every support recovery decoder intersects"""
    if int(encode(a)) == 0:
        raise SubspaceError("Cannot shift a subspace by the inverse of zero")
    return shift(space, inv(a))


def product_space(a: Subspace, e: Subspace) -> Subspace:
    """A.E, the span of all pairwise products of basis elements

    The dimension is at most min(dim(A) * dim(E), m).
    """
    _check_params(a, e)
    if a.dim == 0 or e.dim == 0:
        return zero_subspace(a.params)
    products = a.basis_elements[:, None] * e.basis_elements[None, :]
    return from_vectors(a.params, coefficients(products.reshape(-1)))


def contains(space: Subspace, x: galois.FieldArray) -> bool:
    """Whether every element of x lies in the subspace"""
    return bool(np.all(contains_each(space, x)))


def contains_each(space: Subspace, x: galois.FieldArray) -> np.ndarray:
    """Elementwise membership test, one bool per element of x"""
    if type(x) is not space.params.field:
        raise SubspaceError("Element does not belong to the subspace's field")
    residues = reduce_vectors(coefficients(x), space.basis, space.pivots, space.params.q)
    return ~np.any(residues != 0, axis=-1)


def equals(u: Subspace, v: Subspace) -> bool:
    return u == v


def is_subspace_of(u: Subspace, v: Subspace) -> bool:
    """Whether U ⊆ V"""
    _check_params(u, v)
    if u.dim == 0:
        return True
    residues = reduce_vectors(u.basis, v.basis, v.pivots, v.params.q)
    return not bool(np.any(residues))


def codimension_in(u: Subspace, v: Subspace) -> int:
    """dim(V) - dim(U) for U ⊆ V

    Raises
    ------
    SubspaceError
        If U is not contained in V
    """
    if not is_subspace_of(u, v):
        raise SubspaceError("Codimension requires U to be a subspace of V")
    return v.dim - u.dim


def coordinate_vectors(q: int, dim: int) -> np.ndarray:
    """All q^dim coordinate vectors in base-q counting order

    Row i holds the little-endian base-q digits of i.
    """
    indices = np.arange(q**dim, dtype=np.int64)
    powers = q ** np.arange(dim, dtype=np.int64)
    return (indices[:, None] // powers[None, :]) % q


def enumerate_subspace(
    space: Subspace, cap: int = DEFAULT_ENUMERATION_CAP
) -> galois.FieldArray:
    """Every element of the subspace exactly once

    Element i is sum_j digit_j(i) * basis_j where digit_j(i) is the j-th
    little-endian base-q digit of i; element 0 is always the zero element.

    Parameters
    ----------
    space: Subspace
        The subspace to enumerate
    cap: int
        Maximum number of elements

    Returns
    -------
    galois.FieldArray
        The q^dim elements

    Raises
    ------
    ResourceLimitError
        If q^dim exceeds cap
    """
    count = space.cardinality
    if count > cap:
        raise ResourceLimitError(
            f"Enumerating {count} elements exceeds the cap of {cap}"
        )
    coords = coordinate_vectors(space.params.q, space.dim)
    vectors = (coords @ space.basis) % space.params.q
    return from_coefficients(space.params, vectors.reshape(count, space.params.m))


def random_subspace(
    params: FieldParams,
    dim: int,
    rng: np.random.Generator,
    ambient: Subspace | None = None,
) -> Subspace:
    """A uniformly random subspace of a given dimension

    Uniform vectors are drawn and kept whenever they raise the rank, which gives
    the uniform distribution over subspaces of that dimension.

    Parameters
    ----------
    params: FieldParams
        The field
    dim: int
        Target dimension
    rng: numpy.random.Generator
        Random source
    ambient: Subspace | None
        If given, sample inside this subspace instead of F_{q^m}

    Returns
    -------
    Subspace
        The random subspace

    Raises
    ------
    SubspaceError
        If dim is negative or larger than the ambient dimension
    """
    ambient_dim = params.m if ambient is None else ambient.dim
    if dim < 0 or dim > ambient_dim:
        raise SubspaceError(
            f"Cannot draw a {dim}-dimensional subspace of a {ambient_dim}-dimensional space"
        )
    rows = np.zeros((0, params.m), dtype=np.int64)
    while rows.shape[0] < dim:
        coords = rng.integers(0, params.q, size=ambient_dim)
        vector = coords if ambient is None else (coords @ ambient.basis) % params.q
        candidate = np.vstack([rows, vector[None, :]])
        if rank(candidate, params.q) > rows.shape[0]:
            rows = candidate
    return from_vectors(params, rows)
