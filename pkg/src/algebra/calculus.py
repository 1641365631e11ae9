"""
Logarithmic Calculus Module
Derivations, polar maps, Hessian matrices and exact polynomial-matrix algebra
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .laurent import (
    LaurentPolynomial,
    Scalar,
    evaluate,
    exact_divide,
    mul,
    sub,
)

logger = logging.getLogger(__name__)


class CalculusError(ValueError):
    """Invalid derivative index, malformed matrix or undefined Gauss point"""


@dataclass(frozen=True)
class PolyVector:
    """Tuple of Laurent polynomials sharing one ambient variable count"""
    n: int
    components: Tuple[LaurentPolynomial, ...]

    def __post_init__(self):
        for component in self.components:
            if component.n != self.n:
                raise CalculusError(f"component in {component.n} variables, expected {self.n}")

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> LaurentPolynomial:
        return self.components[i]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)


@dataclass(frozen=True)
class PolyMatrix:
    """
    Square matrix of Laurent polynomials

    nvars is the ambient variable count of the entries; size is the matrix
    dimension (they coincide for the Hessian matrices).
    """
    nvars: int
    entries: Tuple[Tuple[LaurentPolynomial, ...], ...]

    def __post_init__(self):
        size = len(self.entries)
        for row in self.entries:
            if len(row) != size:
                raise CalculusError(f"matrix is not square: row of length {len(row)} in size {size}")
            for entry in row:
                if entry.n != self.nvars:
                    raise CalculusError(f"entry in {entry.n} variables, expected {self.nvars}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentPolynomial]], nvars: Optional[int] = None) -> 'PolyMatrix':
        if nvars is None:
            if not rows:
                raise CalculusError("empty matrix needs an explicit variable count")
            nvars = rows[0][0].n
        return cls(nvars, tuple(tuple(row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> LaurentPolynomial:
        i, j = index
        return self.entries[i][j]

    def rows(self) -> List[List[LaurentPolynomial]]:
        return [list(row) for row in self.entries]

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.size) for j in range(i)
        )

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)


# ==================== Derivations ====================

def _check_index(f: LaurentPolynomial, i: int) -> None:
    if not 1 <= i <= f.n:
        raise CalculusError(f"variable index {i} out of range 1..{f.n}")


def partial_derivative(f: LaurentPolynomial, i: int) -> LaurentPolynomial:
    """
    Partial derivative with respect to x_i (1-based)

    A term x^I maps to i_i * x^(I - e_i); terms with i_i = 0 vanish.
    """
    _check_index(f, i)
    k = i - 1
    terms = {}
    for exponent, coeff in f.items():
        if exponent[k]:
            shifted = exponent[:k] + (exponent[k] - 1,) + exponent[k + 1:]
            terms[shifted] = coeff * exponent[k]
    return LaurentPolynomial(f.n, terms)


def theta(f: LaurentPolynomial, i: int) -> LaurentPolynomial:
    """Logarithmic derivation x_i * d/dx_i: the term x^I maps to i_i * x^I"""
    _check_index(f, i)
    k = i - 1
    return LaurentPolynomial(f.n, {e: c * e[k] for e, c in f.items() if e[k]})


def logarithmic_polar_map(f: LaurentPolynomial) -> PolyVector:
    """L_f = (theta_1 f, ..., theta_n f)"""
    return PolyVector(f.n, tuple(theta(f, i) for i in range(1, f.n + 1)))


def affine_polar_map(f: LaurentPolynomial) -> PolyVector:
    """Gradient (f_x1, ..., f_xn)"""
    return PolyVector(f.n, tuple(partial_derivative(f, i) for i in range(1, f.n + 1)))


def jacobian(v: PolyVector) -> PolyMatrix:
    """Entry (i, j) is d/dx_j of component i; v must have n components"""
    if len(v) != v.n:
        raise CalculusError(f"jacobian needs {v.n} components, got {len(v)}")
    return PolyMatrix(v.n, tuple(
        tuple(partial_derivative(component, j) for j in range(1, v.n + 1))
        for component in v.components
    ))


# ==================== Hessian matrices ====================

def log_hessian(f: LaurentPolynomial) -> PolyMatrix:
    """Logarithmic Hessian Af: entry (i, j) = d/dx_j (x_i f_xi), the Jacobian of L_f"""
    return jacobian(logarithmic_polar_map(f))


def log_hessian_symmetric(f: LaurentPolynomial) -> PolyMatrix:
    """
    Symmetric logarithmic Hessian: entry (i, j) = theta_j theta_i f

    Equals log_hessian(f) with column j multiplied by x_j.
    """
    first = [theta(f, i) for i in range(1, f.n + 1)]
    return PolyMatrix(f.n, tuple(
        tuple(theta(row, j) for j in range(1, f.n + 1)) for row in first
    ))


def classical_hessian(f: LaurentPolynomial) -> PolyMatrix:
    """Hf: entry (i, j) = d/dx_j d/dx_i f"""
    return jacobian(affine_polar_map(f))


def variables_product(n: int) -> LaurentPolynomial:
    """The monomial x1*x2*...*xn"""
    return LaurentPolynomial.monomial((1,) * n)


# ==================== Determinant and rank ====================

def _normalize_rows(rows: List[List[LaurentPolynomial]], nvars: int) -> Tuple[int, ...]:
    """
    Divide each row by its monomial content, in place

    Afterwards every entry is an ordinary polynomial. Returns the exponent of
    the product of the removed monomials.
    """
    removed = [0] * nvars
    for row in rows:
        contents = [entry.monomial_content() for entry in row if not entry.is_zero()]
        if not contents:
            continue
        content = tuple(min(column) for column in zip(*contents))
        if not any(content):
            continue
        unit = LaurentPolynomial.monomial(tuple(-e for e in content))
        row[:] = [mul(entry, unit) for entry in row]
        removed = [a + b for a, b in zip(removed, content)]
    return tuple(removed)


def det(M: PolyMatrix) -> LaurentPolynomial:
    """
    Exact determinant by fraction-free (Bareiss) elimination

    Rows are first cleared of their monomial content so every division is
    an exact division of ordinary polynomials. The pivot is the first entry
    in the current column that is not the zero polynomial.

    Args:
        M: Square polynomial matrix

    Returns:
        det(M); 1 for the empty matrix
    """
    size = M.size
    one = LaurentPolynomial.constant(1, M.nvars)
    if size == 0:
        return one
    rows = M.rows()
    if any(all(e.is_zero() for e in row) for row in rows):
        return LaurentPolynomial.zero(M.nvars)
    removed = _normalize_rows(rows, M.nvars)

    sign = 1
    previous = one
    for k in range(size - 1):
        pivot = next((i for i in range(k, size) if not rows[i][k].is_zero()), None)
        if pivot is None:
            return LaurentPolynomial.zero(M.nvars)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = sub(mul(rows[k][k], rows[i][j]), mul(rows[i][k], rows[k][j]))
                rows[i][j] = exact_divide(numerator, previous)
            rows[i][k] = LaurentPolynomial.zero(M.nvars)
        previous = rows[k][k]

    result = mul(rows[-1][-1], LaurentPolynomial.monomial(removed))
    return -result if sign < 0 else result


def generic_rank(M: PolyMatrix) -> int:
    """
    Rank over the field of fractions

    Fraction-free row echelon elimination; a column without a nonzero entry
    below the current pivot row is skipped. Deterministic.
    """
    rows = M.rows()
    _normalize_rows(rows, M.nvars)
    size = M.size
    rank = 0
    previous = LaurentPolynomial.constant(1, M.nvars)
    for col in range(size):
        if rank == size:
            break
        pivot = next((i for i in range(rank, size) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(rank + 1, size):
            for j in range(col + 1, size):
                numerator = sub(mul(rows[rank][col], rows[i][j]), mul(rows[i][col], rows[rank][j]))
                rows[i][j] = exact_divide(numerator, previous)
            rows[i][col] = LaurentPolynomial.zero(M.nvars)
        previous = rows[rank][col]
        rank += 1
    logger.debug(f"generic rank {rank} of {size}x{size} matrix")
    return rank


def det_cofactor(M: PolyMatrix) -> LaurentPolynomial:
    """Determinant by cofactor expansion along the first row (small matrices)"""
    def expand(rows: List[List[LaurentPolynomial]]) -> LaurentPolynomial:
        if not rows:
            return LaurentPolynomial.constant(1, M.nvars)
        total = LaurentPolynomial.zero(M.nvars)
        for j, entry in enumerate(rows[0]):
            if entry.is_zero():
                continue
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            term = mul(entry, expand(minor))
            total = sub(total, term) if j % 2 else total + term
        return total

    return expand(M.rows())


def evaluate_matrix(M: PolyMatrix, point: Sequence[Scalar]) -> List[List[Fraction]]:
    """Entrywise exact evaluation at a torus point"""
    return [[evaluate(entry, point) for entry in row] for row in M.entries]


def rational_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank of a rational matrix by Gaussian elimination over Q"""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    cols = len(work[0])
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(rank + 1, len(work)):
            factor = work[i][col] / work[rank][col]
            if factor:
                work[i] = [a - factor * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def has_vanishing_log_hessian(f: LaurentPolynomial) -> bool:
    return det(log_hessian(f)).is_zero()


def has_vanishing_hessian(f: LaurentPolynomial) -> bool:
    """Classical criterion det(Hf) = 0"""
    return det(classical_hessian(f)).is_zero()


# ==================== Logarithmic Gauss map ====================

def log_gauss_point(f: LaurentPolynomial, x: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    """
    Logarithmic Gauss map at a torus point

    Args:
        f: Polynomial
        x: Torus point (nonzero rational coordinates)

    Returns:
        (theta_1 f(x) : ... : theta_n f(x)) scaled so the first nonzero entry is 1

    Raises:
        CalculusError: L_f(x) is the zero vector
    """
    values = [evaluate(component, x) for component in logarithmic_polar_map(f).components]
    lead = next((v for v in values if v != 0), None)
    if lead is None:
        raise CalculusError("logarithmic Gauss map is undefined: L_f vanishes at the point")
    return tuple(v / lead for v in values)
