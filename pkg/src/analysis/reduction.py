"""
Torus Reduction Module
Support lattices, monoidal transformations and certified variable elimination
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from ..algebra.calculus import (
    evaluate_matrix,
    generic_rank,
    log_hessian,
    logarithmic_polar_map,
    rational_rank,
)
from ..algebra.laurent import DimensionError, LaurentPolynomial, Scalar, evaluate
from ..lattice import (
    LatticeBasis,
    LatticeError,
    Position,
    identity,
    integer_inverse,
    integer_matrix,
    is_primitive,
    is_unimodular,
    matmul,
    saturate_rows,
    saturated_kernel,
    to_rows,
    unimodular_completion,
)

logger = logging.getLogger(__name__)

# Random torus points for the certified rank path: integer coordinates in [2, 101]
POINT_LOW = 2
POINT_HIGH = 101
RANK_RETRIES = 5


class ReductionError(ValueError):
    """Inconsistent input for building a torus automorphism"""


class ReductionCheck(Enum):
    """Conditions checked by verify_reduction"""
    AUTOMORPHISM = "a"      # det(A) = +-1 and A * A^-1 = I
    ELIMINATED = "b"        # last k exponent coordinates of the reduced polynomial vanish
    ROUND_TRIP = "c"        # pulling back by A^-1 recovers f exactly
    HESSIAN_RANK = "d"      # generic rank of Af equals n - k


@dataclass(frozen=True)
class TorusAutomorphism:
    """
    Monoidal transformation x -> (x^A[0], ..., x^A[n-1]) with unimodular A

    The pullback sends the monomial x^I to x^(A^T I).
    """
    A: Tuple[Tuple[int, ...], ...]
    A_inverse: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, A) -> 'TorusAutomorphism':
        matrix = integer_matrix(A)
        try:
            inverse = integer_inverse(matrix)
        except LatticeError as e:
            raise ReductionError(f"not a torus automorphism: {e}") from e
        return cls(to_rows(matrix), to_rows(inverse))

    @classmethod
    def identity(cls, n: int) -> 'TorusAutomorphism':
        rows = to_rows(identity(n))
        return cls(rows, rows)

    @property
    def n(self) -> int:
        return len(self.A)

    def matrix(self) -> np.ndarray:
        return integer_matrix(self.A, cols=self.n)

    def inverse_matrix(self) -> np.ndarray:
        return integer_matrix(self.A_inverse, cols=self.n)

    def inverse(self) -> 'TorusAutomorphism':
        return TorusAutomorphism(self.A_inverse, self.A)

    def compose(self, other: 'TorusAutomorphism') -> 'TorusAutomorphism':
        """Automorphism of the product matrix self.A @ other.A"""
        return TorusAutomorphism(
            to_rows(matmul(self.matrix(), other.matrix())),
            to_rows(matmul(other.inverse_matrix(), self.inverse_matrix())),
        )

    def is_valid(self) -> bool:
        try:
            square = all(len(row) == self.n for row in self.A + self.A_inverse)
            if not square or not is_unimodular(self.matrix()):
                return False
            product = matmul(self.matrix(), self.inverse_matrix())
        except LatticeError:
            return False
        return bool((product == identity(self.n)).all())

    def apply_to_point(self, point: Sequence[Scalar]) -> Tuple[Fraction, ...]:
        """Image of a torus point: coordinate i is prod_j point_j ** A[i][j]"""
        if len(point) != self.n:
            raise DimensionError(f"point has {len(point)} coordinates, expected {self.n}")
        image = []
        for row in self.A:
            value = Fraction(1)
            for p, a in zip(point, row):
                value *= Fraction(p) ** a
            image.append(value)
        return tuple(image)


@dataclass(frozen=True)
class ReductionResult:
    """Certificate that f depends on n - k variables after a monoidal change"""
    n: int
    r: int
    k: int
    lambda_basis: LatticeBasis
    m_basis: LatticeBasis
    automorphism: TorusAutomorphism
    reduced: LaurentPolynomial
    hessian_rank: int
    verified: bool = False

    def reduced_in_fewer_variables(self) -> LaurentPolynomial:
        """The reduced polynomial with its eliminated trailing variables dropped (at least one kept)"""
        return self.reduced.truncate(max(self.r, 1))


@dataclass
class Verification:
    """Outcome of verify_reduction; falsy when any check failed"""
    failed: List[ReductionCheck] = field(default_factory=list)
    details: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed

    @property
    def reasons(self) -> List[str]:
        return [check.value for check in self.failed]

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, check: ReductionCheck, detail: str) -> None:
        self.failed.append(check)
        self.details.append(f"({check.value}) {detail}")


# ==================== Lattices ====================

def support_lattice(f: LaurentPolynomial) -> LatticeBasis:
    """
    Saturation of the lattice generated by the exponents of f

    Empty for constant and zero polynomials.
    """
    return saturate_rows(f.exponent_matrix(), f.n)


def orthogonal_lattice(lambda_basis: LatticeBasis) -> LatticeBasis:
    """M = integer vectors orthogonal to every vector of the lattice"""
    return saturated_kernel(lambda_basis.as_rows())


# ==================== Rank ====================

def hessian_rank_certified(
    f: LaurentPolynomial,
    seed: int = 0,
    retries: int = RANK_RETRIES
) -> int:
    """
    Generic rank of the logarithmic Hessian

    rank(Af(p)) <= generic rank <= rank of the support lattice for every torus
    point p, so a random point reaching the lattice rank certifies the
    answer. After the retry budget the deterministic generic_rank decides.

    Args:
        f: Polynomial
        seed: Seed for the random torus points
        retries: Number of random points tried

    Returns:
        The generic rank of Af
    """
    target = support_lattice(f).rank
    if target == 0:
        return 0
    matrix = log_hessian(f)
    rng = np.random.default_rng(seed)
    for attempt in range(retries):
        point = [int(x) for x in rng.integers(POINT_LOW, POINT_HIGH + 1, size=f.n)]
        rank = rational_rank(evaluate_matrix(matrix, point))
        if rank > target:
            raise ReductionError(f"evaluated rank {rank} exceeds support rank {target}")
        if rank == target:
            return rank
        logger.debug(f"attempt {attempt + 1}: rank {rank} < {target} at {point}")
    logger.debug("random points inconclusive, falling back to fraction-free rank")
    return generic_rank(matrix)


# ==================== Monoidal transformations ====================

def build_automorphism(lambda_basis: LatticeBasis, m_basis: LatticeBasis) -> TorusAutomorphism:
    """
    Unimodular A whose last k columns are the basis of M

    Args:
        lambda_basis: Primitive basis of the support lattice, rank r
        m_basis: Primitive basis of its orthogonal, rank k = n - r

    Returns:
        TorusAutomorphism; the identity when k = 0

    Raises:
        ReductionError: ranks, orthogonality or primitivity fail
    """
    n = lambda_basis.ambient_dim
    if m_basis.ambient_dim != n:
        raise ReductionError(f"bases live in Z^{n} and Z^{m_basis.ambient_dim}")
    if lambda_basis.rank + m_basis.rank != n:
        raise ReductionError(f"ranks {lambda_basis.rank} + {m_basis.rank} do not add up to {n}")
    if not lambda_basis.is_orthogonal_to(m_basis):
        raise ReductionError("lattice and orthogonal basis are not orthogonal")
    if not (is_primitive(lambda_basis) and is_primitive(m_basis)):
        raise ReductionError("bases must be primitive")
    if m_basis.rank == 0:
        return TorusAutomorphism.identity(n)
    return TorusAutomorphism.from_matrix(unimodular_completion(m_basis, Position.TRAILING))


def monomial_substitute(f: LaurentPolynomial, phi: TorusAutomorphism) -> LaurentPolynomial:
    """
    Pullback of f along the monoidal transformation

    Each term a_I x^I becomes a_I x^(A^T I); A^T is injective so the term
    count is preserved.
    """
    if phi.n != f.n:
        raise DimensionError(f"automorphism of rank {phi.n} applied to polynomial in {f.n} variables")
    columns = list(zip(*phi.A))
    return f.map_exponents(
        lambda exponent: tuple(sum(a * e for a, e in zip(column, exponent)) for column in columns)
    )


# ==================== Reduction ====================

def reduce_variables(f: LaurentPolynomial, seed: int = 0) -> ReductionResult:
    """
    Eliminate as many variables as a torus automorphism allows

    Args:
        f: Polynomial in n variables
        seed: Seed for the certified rank path

    Returns:
        ReductionResult whose reduced polynomial has its last k exponent
        coordinates equal to zero
    """
    lambda_basis = support_lattice(f)
    m_basis = orthogonal_lattice(lambda_basis)
    automorphism = build_automorphism(lambda_basis, m_basis)
    result = ReductionResult(
        n=f.n,
        r=lambda_basis.rank,
        k=f.n - lambda_basis.rank,
        lambda_basis=lambda_basis,
        m_basis=m_basis,
        automorphism=automorphism,
        reduced=monomial_substitute(f, automorphism),
        hessian_rank=hessian_rank_certified(f, seed=seed),
    )
    verification = verify_reduction(f, result)
    if not verification:
        logger.error(f"reduction of {f} failed verification: {verification.details}")
    logger.info(f"reduced {len(f)}-term polynomial in {f.n} variables: r={result.r}, k={result.k}")
    return replace(result, verified=verification.ok)


def verify_reduction(f: LaurentPolynomial, result: ReductionResult) -> Verification:
    """
    Check a reduction certificate

    Returns:
        Verification, falsy with reason codes (a)-(d) when a check fails
    """
    outcome = Verification()
    n, k = result.n, result.k
    phi = result.automorphism

    if phi.n != n or not phi.is_valid():
        outcome.fail(ReductionCheck.AUTOMORPHISM, "A is not unimodular or A_inverse is not its inverse")

    if not 0 <= k <= n or any(any(e[n - k:]) for e in result.reduced.exponents()):
        outcome.fail(ReductionCheck.ELIMINATED, f"last {k} exponent coordinates are not all zero")

    try:
        recovered = monomial_substitute(result.reduced, phi.inverse())
        if recovered != f:
            outcome.fail(ReductionCheck.ROUND_TRIP, f"pullback by A^-1 gives {recovered}, not {f}")
    except ValueError as e:
        outcome.fail(ReductionCheck.ROUND_TRIP, f"pullback by A^-1 failed: {e}")

    if result.hessian_rank != n - k:
        outcome.fail(ReductionCheck.HESSIAN_RANK, f"hessian rank {result.hessian_rank} != n - k = {n - k}")

    return outcome


# ==================== Coset structure ====================

def coset_invariance_check(f: LaurentPolynomial, m_basis: LatticeBasis) -> bool:
    """
    Symbolic invariance of L_f along the subtorus directions of M

    For each m in M substitutes x_i -> x_i t^m_i in every component of L_f,
    as a polynomial in n + 1 variables, and checks that t drops out.
    """
    if m_basis.ambient_dim != f.n:
        raise DimensionError(f"basis in Z^{m_basis.ambient_dim} for polynomial in {f.n} variables")
    components = logarithmic_polar_map(f).components
    for m in m_basis.vectors:
        for component in components:
            lifted = component.embed(f.n + 1).map_exponents(
                lambda e: e[:-1] + (sum(a * b for a, b in zip(m, e)),)
            )
            if any(e[-1] for e in lifted.exponents()):
                logger.debug(f"L_f component {component} moves along {m}")
                return False
    return True


def subgroup_point(m_basis: LatticeBasis, params: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    """Point of the subtorus generated by M: h_i = prod_j params_j ** m_j[i]"""
    if len(params) != m_basis.rank:
        raise DimensionError(f"{len(params)} parameters for a rank {m_basis.rank} lattice")
    point = [Fraction(1)] * m_basis.ambient_dim
    for t, m in zip(params, m_basis.vectors):
        point = [p * Fraction(t) ** e for p, e in zip(point, m)]
    return tuple(point)


def coset_invariance_at_point(
    f: LaurentPolynomial,
    m_basis: LatticeBasis,
    x: Sequence[Scalar],
    params: Sequence[Scalar]
) -> bool:
    """Numeric check that L_f(x) = L_f(x * h) for h on the subtorus of M"""
    h = subgroup_point(m_basis, params)
    moved = [Fraction(a) * b for a, b in zip(x, h)]
    for component in logarithmic_polar_map(f).components:
        if evaluate(component, x) != evaluate(component, moved):
            return False
    return True
