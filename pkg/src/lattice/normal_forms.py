"""
Integer Normal Forms Module
Hermite and Smith normal forms with their unimodular transforms
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


class LatticeError(ValueError):
    """Invalid lattice input: non-square, dependent or non-primitive"""


def integer_matrix(data, cols: Optional[int] = None) -> np.ndarray:
    """
    Exact integer matrix as a numpy object array

    Args:
        data: Nested sequence (or array) of integers
        cols: Column count, needed when data is an empty list

    Returns:
        2-D array with dtype=object holding Python ints
    """
    if cols is None and isinstance(data, np.ndarray) and data.ndim == 2:
        cols = data.shape[1]
    rows = [[int(x) for x in row] for row in data]
    if not rows:
        return np.zeros((0, cols or 0), dtype=object)
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise LatticeError("ragged integer matrix")
    matrix = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            matrix[i, j] = x
    return matrix


def identity(n: int) -> np.ndarray:
    return integer_matrix([[int(i == j) for j in range(n)] for i in range(n)], cols=n)


def to_rows(M: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in M)


def _swap_rows(M: np.ndarray, i: int, j: int) -> None:
    if i != j:
        M[[i, j]] = M[[j, i]]


def _swap_cols(M: np.ndarray, i: int, j: int) -> None:
    if i != j:
        M[:, [i, j]] = M[:, [j, i]]


# ==================== Hermite normal form ====================

def hnf(M) -> Tuple[np.ndarray, np.ndarray]:
    """
    Row-style Hermite normal form

    Args:
        M: Integer matrix (m x p)

    Returns:
        (H, U) with U unimodular and U @ M == H; H is in row echelon form with
        positive pivots, entries above each pivot reduced modulo it and zero
        rows last
    """
    H = integer_matrix(M)
    m, p = H.shape
    U = identity(m)
    r = 0
    for c in range(p):
        if r == m:
            break
        # Euclid on column c below the current pivot row
        while True:
            nonzero = [i for i in range(r, m) if H[i, c] != 0]
            if not nonzero:
                break
            smallest = min(nonzero, key=lambda i: abs(H[i, c]))
            _swap_rows(H, r, smallest)
            _swap_rows(U, r, smallest)
            cleared = True
            for i in range(r + 1, m):
                if H[i, c] != 0:
                    q = H[i, c] // H[r, c]
                    H[i] -= q * H[r]
                    U[i] -= q * U[r]
                    if H[i, c] != 0:
                        cleared = False
            if cleared:
                break
        if H[r, c] == 0:
            continue
        if H[r, c] < 0:
            H[r] = -H[r]
            U[r] = -U[r]
        for i in range(r):
            q = H[i, c] // H[r, c]
            if q:
                H[i] -= q * H[r]
                U[i] -= q * U[r]
        r += 1
    return H, U


# ==================== Smith normal form ====================

def snf(M) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Smith normal form

    Args:
        M: Integer matrix (m x p)

    Returns:
        (S, U, V) with U, V unimodular and U @ M @ V == S, where S is diagonal
        with d_1 | d_2 | ... | d_r >= 1 followed by zeros
    """
    S = integer_matrix(M)
    m, p = S.shape
    U = identity(m)
    V = identity(p)

    for t in range(min(m, p)):
        entries = [(abs(S[i, j]), i, j) for i in range(t, m) for j in range(t, p) if S[i, j] != 0]
        if not entries:
            break
        _, i0, j0 = min(entries)
        _swap_rows(S, t, i0)
        _swap_rows(U, t, i0)
        _swap_cols(S, t, j0)
        _swap_cols(V, t, j0)

        while True:
            for i in range(t + 1, m):
                if S[i, t] != 0:
                    q = S[i, t] // S[t, t]
                    S[i] -= q * S[t]
                    U[i] -= q * U[t]
            for j in range(t + 1, p):
                if S[t, j] != 0:
                    q = S[t, j] // S[t, t]
                    S[:, j] -= q * S[:, t]
                    V[:, j] -= q * V[:, t]

            leftovers = [(abs(S[i, t]), 0, i) for i in range(t + 1, m) if S[i, t] != 0]
            leftovers += [(abs(S[t, j]), 1, j) for j in range(t + 1, p) if S[t, j] != 0]
            if leftovers:
                # remainders are smaller than the pivot; promote the smallest
                _, axis, k = min(leftovers)
                if axis == 0:
                    _swap_rows(S, t, k)
                    _swap_rows(U, t, k)
                else:
                    _swap_cols(S, t, k)
                    _swap_cols(V, t, k)
                continue

            offending = next(
                (i for i in range(t + 1, m) for j in range(t + 1, p) if S[i, j] % S[t, t] != 0),
                None
            )
            if offending is None:
                break
            S[t] += S[offending]
            U[t] += U[offending]

        if S[t, t] < 0:
            S[t] = -S[t]
            U[t] = -U[t]
    return S, U, V


def smith_invariants(M) -> Tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form"""
    S, _, _ = snf(M)
    return tuple(int(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0)


def matrix_rank(M) -> int:
    return len(smith_invariants(M))


# ==================== Determinant, unimodularity, inverse ====================

def integer_det(A) -> int:
    """Determinant of a square integer matrix by Bareiss elimination over Z"""
    rows = [[int(x) for x in row] for row in A]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise LatticeError("determinant of a non-square matrix")
    sign = 1
    previous = 1
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) // previous
        previous = rows[k][k]
    return sign * rows[-1][-1] if n else 1


def is_unimodular(A) -> bool:
    """True iff A is square with determinant +1 or -1"""
    shape = integer_matrix(A).shape
    if shape[0] != shape[1]:
        raise LatticeError(f"unimodularity needs a square matrix, got shape {shape}")
    return integer_det(A) in (1, -1)


def integer_inverse(A) -> np.ndarray:
    """
    Exact inverse of a unimodular matrix

    The Hermite form of a unimodular matrix is the identity, so its
    transform is the inverse.
    """
    A = integer_matrix(A)
    n, p = A.shape
    if n != p:
        raise LatticeError(f"inverse of a non-square matrix of shape {A.shape}")
    H, U = hnf(A)
    if not (H == identity(n)).all():
        raise LatticeError("matrix is not unimodular")
    return U


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact product that keeps object dtype for empty operands"""
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=object)
    return A @ B


def column_block(vectors: Sequence[Sequence[int]], n: int) -> np.ndarray:
    """n x r matrix whose columns are the given vectors"""
    return integer_matrix(vectors, cols=n).T.copy()
