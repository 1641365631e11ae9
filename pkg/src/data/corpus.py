"""
Corpus Generator Module
Deterministic random Laurent polynomials supported on a rank-r lattice
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

import numpy as np

from ..algebra.laurent import LaurentPolynomial
from ..lattice import identity, lattice_rank, saturate_rows, to_rows

logger = logging.getLogger(__name__)

# Lattice generators and combination weights are drawn from [-SMALL, SMALL]
SMALL = 2
MAX_BASIS_ATTEMPTS = 100
EXPONENT_ATTEMPTS_PER_TERM = 20


class CorpusError(ValueError):
    """Infeasible corpus specification or index"""


@dataclass(frozen=True)
class CorpusSpec:
    """Parameters of a reproducible random corpus"""
    n: int
    rank: int
    max_terms: int = 8
    exponent_bound: int = 4
    coefficient_bound: int = 9
    seed: int = 0
    instance_count: int = 100

    def __post_init__(self):
        if self.n < 1:
            raise CorpusError(f"variable count must be positive, got {self.n}")
        if not 0 <= self.rank <= self.n:
            raise CorpusError(f"lattice rank {self.rank} outside 0..{self.n}")
        for name in ('max_terms', 'exponent_bound', 'coefficient_bound'):
            if getattr(self, name) < 1:
                raise CorpusError(f"{name} must be positive, got {getattr(self, name)}")
        if self.instance_count < 0:
            raise CorpusError(f"instance_count must be non-negative, got {self.instance_count}")


def sweep_specs(
    max_n: int = 5,
    per_shape: int = 10,
    seed: int = 0,
    **bounds
) -> List[CorpusSpec]:
    """One spec for every shape (n, r) with 1 <= n <= max_n and 0 <= r <= n"""
    return [
        CorpusSpec(n=n, rank=r, seed=seed, instance_count=per_shape, **bounds)
        for n in range(1, max_n + 1)
        for r in range(0, n + 1)
    ]


def instance_rng(spec: CorpusSpec, index: int, stream: int = 0) -> np.random.Generator:
    """Generator determined by (seed, index, stream) alone"""
    return np.random.default_rng([spec.seed, index, stream])


def _random_coefficient(rng: np.random.Generator, bound: int) -> Fraction:
    numerator = int(rng.integers(1, bound + 1))
    denominator = int(rng.integers(1, bound + 1))
    sign = -1 if rng.integers(0, 2) else 1
    return Fraction(sign * numerator, denominator)


def _random_lattice(rng: np.random.Generator, n: int, r: int) -> Tuple[Tuple[int, ...], ...]:
    """Primitive basis of a random rank-r sublattice of Z^n"""
    for _ in range(MAX_BASIS_ATTEMPTS):
        generators = [[int(x) for x in row] for row in rng.integers(-SMALL, SMALL + 1, size=(r, n))]
        if lattice_rank(generators, n) == r:
            return saturate_rows(generators, n).vectors
    logger.warning(f"no random rank {r} lattice found in Z^{n}; using coordinate vectors")
    return to_rows(identity(n))[:r]


def generate_corpus_sample(spec: CorpusSpec, index: int) -> LaurentPolynomial:
    """
    Instance number index of the corpus

    Samples a random primitive lattice of rank r, then up to max_terms
    distinct exponents as small integer combinations of its basis within the
    exponent bound, each with a nonzero rational coefficient.

    Args:
        spec: Corpus parameters
        index: Instance index, 0 <= index < instance_count

    Returns:
        Polynomial whose support lattice has rank at most r
    """
    if not 0 <= index < spec.instance_count:
        raise CorpusError(f"index {index} outside 0..{spec.instance_count - 1}")
    rng = instance_rng(spec, index)
    n = spec.n
    if spec.rank == 0:
        return LaurentPolynomial.constant(_random_coefficient(rng, spec.coefficient_bound), n)

    basis = np.array(_random_lattice(rng, n, spec.rank), dtype=object)
    wanted = int(rng.integers(1, spec.max_terms + 1))
    exponents: Dict[Tuple[int, ...], None] = {}
    for _ in range(EXPONENT_ATTEMPTS_PER_TERM * wanted):
        if len(exponents) == wanted:
            break
        weights = np.array([int(x) for x in rng.integers(-SMALL, SMALL + 1, size=spec.rank)], dtype=object)
        exponent = tuple(int(x) for x in weights @ basis)
        if max(abs(e) for e in exponent) <= spec.exponent_bound:
            exponents[exponent] = None
    if not exponents:
        exponents[(0,) * n] = None

    return LaurentPolynomial(n, {
        exponent: _random_coefficient(rng, spec.coefficient_bound) for exponent in exponents
    })


def iter_corpus(spec: CorpusSpec) -> Iterator[Tuple[int, LaurentPolynomial]]:
    for index in range(spec.instance_count):
        yield index, generate_corpus_sample(spec, index)


def random_unimodular(rng: np.random.Generator, n: int, steps: int = 6) -> np.ndarray:
    """
    Random unimodular integer matrix

    Product of elementary operations: row additions with small multipliers,
    row swaps and sign flips.
    """
    A = identity(n)
    if n == 1:
        return -A if rng.integers(0, 2) else A
    for _ in range(steps):
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        move = int(rng.integers(0, 3))
        if move == 0:
            A[i] += int(rng.integers(-SMALL, SMALL + 1)) * A[j]
        elif move == 1:
            A[[i, j]] = A[[j, i]]
        else:
            A[i] = -A[i]
    return A
