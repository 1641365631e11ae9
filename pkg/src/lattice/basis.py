"""
Lattice Basis Module
Saturated kernels, saturation and unimodular completion of primitive lattices
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np

from .normal_forms import (
    LatticeError,
    column_block,
    hnf,
    identity,
    integer_inverse,
    integer_matrix,
    is_unimodular,
    matrix_rank,
    smith_invariants,
    snf,
    to_rows,
)

logger = logging.getLogger(__name__)


class Position(Enum):
    """Where the given basis sits inside a unimodular completion"""
    LEADING = "leading"
    TRAILING = "trailing"


@dataclass(frozen=True)
class LatticeBasis:
    """
    Basis of a sublattice of Z^n

    vectors are linearly independent over Q; primitive records that the
    quotient Z^n / span is torsion-free.
    """
    ambient_dim: int
    vectors: Tuple[Tuple[int, ...], ...]
    primitive: bool = False

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise LatticeError(f"vector {v} does not live in Z^{self.ambient_dim}")
        if self.vectors and matrix_rank(self.as_rows()) != len(self.vectors):
            raise LatticeError("basis vectors are linearly dependent")

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Sequence[Sequence[int]]) -> 'LatticeBasis':
        """Basis of the given independent vectors, with primitivity detected"""
        rows = tuple(tuple(int(x) for x in v) for v in vectors)
        basis = cls(ambient_dim, rows)
        return cls(ambient_dim, rows, primitive=is_primitive(basis))

    @classmethod
    def empty(cls, ambient_dim: int) -> 'LatticeBasis':
        return cls(ambient_dim, (), primitive=True)

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def as_rows(self) -> np.ndarray:
        """r x n integer matrix"""
        return integer_matrix(self.vectors, cols=self.ambient_dim)

    def as_columns(self) -> np.ndarray:
        """n x r integer matrix"""
        return column_block(self.vectors, self.ambient_dim)

    def to_lists(self):
        return [list(v) for v in self.vectors]

    def is_orthogonal_to(self, other: 'LatticeBasis') -> bool:
        return all(
            sum(a * b for a, b in zip(u, v)) == 0
            for u in self.vectors for v in other.vectors
        )


def is_primitive(B: LatticeBasis) -> bool:
    """True iff Z^n / span(B) is torsion-free, i.e. all Smith invariants are 1"""
    if not B.vectors:
        return True
    invariants = smith_invariants(B.as_rows())
    return len(invariants) == B.rank and all(d == 1 for d in invariants)


def lattice_rank(rows: Sequence[Sequence[int]], n: int) -> int:
    """Rank over Q of the integer vectors given as rows"""
    if not rows:
        return 0
    return matrix_rank(integer_matrix(rows, cols=n))


def _canonical(rows: np.ndarray, n: int) -> Tuple[Tuple[int, ...], ...]:
    """Hermite-reduced basis of the row lattice, zero rows dropped"""
    if rows.shape[0] == 0:
        return ()
    H, _ = hnf(rows)
    return tuple(row for row in to_rows(H) if any(row))


def saturated_kernel(M) -> LatticeBasis:
    """
    Primitive basis of {v in Z^p : M v = 0}

    Read off from the Smith form U M V = S: the columns of V past the rank
    of M span the integer kernel, and columns of a unimodular matrix span a
    primitive lattice. The basis is returned in Hermite form.

    Args:
        M: Integer matrix (m x p)

    Returns:
        LatticeBasis of rank p - rank(M), flagged primitive
    """
    S, _, V = snf(M)
    p = S.shape[1]
    rho = sum(1 for i in range(min(S.shape)) if S[i, i] != 0)
    kernel_rows = V[:, rho:].T.copy()
    return LatticeBasis(p, _canonical(kernel_rows, p), primitive=True)


def saturate_rows(rows: Sequence[Sequence[int]], n: int) -> LatticeBasis:
    """
    Saturation of the lattice generated by arbitrary integer vectors

    The saturation is the orthogonal of the orthogonal: the integer kernel
    of a basis of the integer kernel.
    """
    generators = integer_matrix(rows, cols=n)
    if not any(int(x) for x in generators.flat):
        return LatticeBasis.empty(n)
    orthogonal = saturated_kernel(generators)
    return saturated_kernel(orthogonal.as_rows())


def saturate(B: LatticeBasis) -> LatticeBasis:
    """Primitive basis of the same rational span; idempotent"""
    return saturate_rows(B.vectors, B.ambient_dim)


def unimodular_completion(B: LatticeBasis, position: Position = Position.TRAILING) -> np.ndarray:
    """
    Complete a primitive basis to a unimodular matrix

    Takes the Smith form U Bc V = S of the column matrix Bc. Primitivity
    makes S the identity on top of zeros, so W = U^-1 satisfies
    Bc = W[:, :r] V^-1 and [Bc | W[:, r:]] = W diag(V^-1, I) is unimodular.

    Args:
        B: Primitive basis of r vectors in Z^n
        position: Place B in the first r (leading) or last r (trailing) columns

    Returns:
        n x n unimodular matrix containing B as the designated column block

    Raises:
        LatticeError: B is not primitive
    """
    n = B.ambient_dim
    if not B.vectors:
        return identity(n)
    if not is_primitive(B):
        raise LatticeError("basis is not primitive; saturate it before completing")
    columns = B.as_columns()
    _, U, _ = snf(columns)
    W = integer_inverse(U)
    complement = W[:, B.rank:]
    if position is Position.LEADING:
        A = np.hstack([columns, complement])
    else:
        A = np.hstack([complement, columns])
    if not is_unimodular(A):
        raise LatticeError("completion failed to be unimodular")
    logger.debug(f"completed rank {B.rank} basis in Z^{n} ({position.value})")
    return A
