"""Linear algebra over the prime field F_q

Matrices are int64 ndarrays with entries in [0, q). The elimination loops are
jit-compiled with numba; q is prime so every nonzero pivot is invertible by
Fermat's little theorem. Entries stay below 2^16, so products fit in int64.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def inverse_mod(value: int, q: int) -> int:
    """Jit-ed inverse of a nonzero value modulo the prime q"""
    result = 1
    base = value % q
    exponent = q - 2
    while exponent > 0:
        if exponent & 1:
            result = (result * base) % q
        base = (base * base) % q
        exponent >>= 1
    return result


@njit(cache=True)
def row_reduce(matrix: np.ndarray, q: int) -> int:
    """Jit-ed in-place reduction to reduced row echelon form modulo q

    Parameters
    ----------
    matrix: ndarray
        A 2-D int64 array with entries in [0, q). Overwritten with its RREF; the
        nonzero rows end up on top.
    q: int
        The prime modulus

    Returns
    -------
    int
        The rank of the matrix
    """
    n_rows, n_cols = matrix.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = -1
        for row in range(rank, n_rows):
            if matrix[row, col] != 0:
                pivot = row
                break
        if pivot == -1:
            continue
        if pivot != rank:
            for j in range(col, n_cols):
                temp = matrix[rank, j]
                matrix[rank, j] = matrix[pivot, j]
                matrix[pivot, j] = temp
        scale = inverse_mod(matrix[rank, col], q)
        if scale != 1:
            for j in range(col, n_cols):
                matrix[rank, j] = (matrix[rank, j] * scale) % q
        for row in range(n_rows):
            if row == rank:
                continue
            factor = matrix[row, col]
            if factor == 0:
                continue
            for j in range(col, n_cols):
                matrix[row, j] = (matrix[row, j] - factor * matrix[rank, j]) % q
        rank += 1
    return rank


@njit(cache=True)
def batch_rank(tensor: np.ndarray, q: int) -> np.ndarray:
    """Jit-ed ranks of a stack of matrices

    Parameters
    ----------
    tensor: ndarray
        A 3-D int64 array of shape (N, rows, cols) with entries in [0, q)
    q: int
        The prime modulus

    Returns
    -------
    ndarray
        The N ranks
    """
    ranks = np.zeros(tensor.shape[0], dtype=np.int64)
    for idx in range(tensor.shape[0]):
        work = tensor[idx].copy()
        ranks[idx] = row_reduce(work, q)
    return ranks


def _prepare(matrix: np.ndarray, q: int) -> np.ndarray:
    work = np.atleast_2d(np.array(matrix, dtype=np.int64, copy=True))
    return np.ascontiguousarray(work % q)


def pivot_columns(reduced: np.ndarray) -> np.ndarray:
    """Column index of the leading entry of every (nonzero) row of an RREF matrix"""
    if reduced.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    return np.argmax(reduced != 0, axis=1).astype(np.int64)


def rref(matrix: np.ndarray, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form without zero rows

    Parameters
    ----------
    matrix: ndarray
        A 2-D integer array
    q: int
        The prime modulus

    Returns
    -------
    tuple[ndarray, ndarray]
        The nonzero rows of the RREF (shape rank x cols) and their pivot columns
    """
    work = _prepare(matrix, q)
    n_nonzero = row_reduce(work, q)
    reduced = work[:n_nonzero].copy()
    return reduced, pivot_columns(reduced)


def rank(matrix: np.ndarray, q: int) -> int:
    """Rank of a matrix over F_q"""
    work = _prepare(matrix, q)
    if work.size == 0:
        return 0
    return int(row_reduce(work, q))


def reduce_vectors(
    vectors: np.ndarray, basis: np.ndarray, pivots: np.ndarray, q: int
) -> np.ndarray:
    """Residues of vectors modulo the row space of an RREF basis

    Since the basis has the identity in its pivot columns, subtracting
    v[pivots] @ basis clears exactly those columns; the residue is zero iff v is
    in the row space, and equal residues mean equal cosets.

    Parameters
    ----------
    vectors: ndarray
        Integer array of shape (..., cols)
    basis: ndarray
        RREF basis without zero rows, shape (k, cols)
    pivots: ndarray
        Pivot columns of basis
    q: int
        The prime modulus

    Returns
    -------
    ndarray
        Residues, same shape as vectors
    """
    vectors = np.asarray(vectors, dtype=np.int64)
    if basis.shape[0] == 0:
        return vectors % q
    return (vectors - (vectors[..., pivots] @ basis)) % q


def solve(
    matrix: np.ndarray, rhs: np.ndarray, q: int
) -> tuple[np.ndarray | None, int]:
    """Solve matrix @ x = rhs over F_q

    Parameters
    ----------
    matrix: ndarray
        Coefficient matrix, shape (equations, unknowns)
    rhs: ndarray
        Right hand side, shape (equations,)
    q: int
        The prime modulus

    Returns
    -------
    tuple[ndarray | None, int]
        A particular solution (free variables set to zero), or None when the
        system is inconsistent, and the dimension of the solution space of the
        homogeneous system
    """
    n_unknowns = matrix.shape[1]
    augmented = np.concatenate(
        [np.asarray(matrix, dtype=np.int64), np.asarray(rhs, dtype=np.int64)[:, None]],
        axis=1,
    )
    reduced, pivots = rref(augmented, q)
    if np.any(pivots == n_unknowns):
        return None, n_unknowns - int(reduced.shape[0]) + 1
    solution = np.zeros(n_unknowns, dtype=np.int64)
    solution[pivots] = reduced[:, n_unknowns]
    return solution, n_unknowns - int(reduced.shape[0])
