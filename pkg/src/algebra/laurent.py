"""
Laurent Polynomial Module
Exact sparse Laurent polynomials over the rationals
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class LaurentError(ValueError):
    """Base error for Laurent polynomial operations"""


class DimensionError(LaurentError):
    """Mismatched variable counts or vector lengths"""


class TorusPointError(LaurentError):
    """Evaluation point lies outside the torus (a coordinate is zero)"""


class ExactDivisionError(ArithmeticError):
    """Divisor does not divide the dividend in the Laurent ring"""


class LaurentPolynomial:
    """
    Sparse Laurent polynomial in n variables with rational coefficients

    Terms are stored as a map exponent vector -> nonzero Fraction. Instances
    are immutable; every operation returns a new polynomial. The zero
    polynomial is the empty map.
    """

    __slots__ = ('_n', '_terms', '_hash')

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if n < 1:
            raise LaurentError(f"variable count must be positive, got {n}")
        clean: Dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exponent)
            if len(key) != n:
                raise DimensionError(f"exponent {key} has length {len(key)}, expected {n}")
            value = Fraction(coeff)
            if value != 0:
                clean[key] = value
        self._n = n
        self._terms = clean
        self._hash: Optional[int] = None

    # ==================== Constructors ====================

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[Tuple[Sequence[int], Scalar]]) -> 'LaurentPolynomial':
        """Build a polynomial from (exponent, coefficient) pairs, combining repeats"""
        acc: Dict[Exponent, Fraction] = {}
        for exponent, coeff in terms:
            key = tuple(int(e) for e in exponent)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        return cls(n, acc)

    @classmethod
    def zero(cls, n: int) -> 'LaurentPolynomial':
        return cls(n)

    @classmethod
    def constant(cls, c: Scalar, n: int) -> 'LaurentPolynomial':
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Scalar = 1) -> 'LaurentPolynomial':
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def variable(cls, i: int, n: int) -> 'LaurentPolynomial':
        """The coordinate function x_i (1-based index)"""
        if not 1 <= i <= n:
            raise LaurentError(f"variable index {i} out of range 1..{n}")
        exponent = [0] * n
        exponent[i - 1] = 1
        return cls(n, {tuple(exponent): 1})

    # ==================== Accessors ====================

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        """A copy of the term map"""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def exponents(self) -> List[Exponent]:
        """Support exponents in canonical (descending lexicographic) order"""
        return sorted(self._terms, reverse=True)

    def exponent_matrix(self) -> List[List[int]]:
        """Rows are the support exponents, canonical order"""
        return [list(e) for e in self.exponents()]

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        """Lexicographically largest term; the polynomial must be nonzero"""
        if not self._terms:
            raise LaurentError("zero polynomial has no leading term")
        exponent = max(self._terms)
        return exponent, self._terms[exponent]

    def monomial_content(self) -> Exponent:
        """Componentwise minimum exponent over the support (zeros for f = 0)"""
        if not self._terms:
            return (0,) * self._n
        return tuple(min(column) for column in zip(*self._terms))

    def degree_bounds(self) -> List[Tuple[int, int]]:
        """Per-variable (min, max) exponents; the polynomial must be nonzero"""
        columns = list(zip(*self._terms))
        return [(min(c), max(c)) for c in columns]

    # ==================== Variable changes ====================

    def embed(self, m: int) -> 'LaurentPolynomial':
        """View the polynomial in m >= n variables (new variables do not occur)"""
        if m < self._n:
            raise DimensionError(f"cannot embed {self._n} variables into {m}")
        pad = (0,) * (m - self._n)
        return LaurentPolynomial(m, {e + pad: c for e, c in self._terms.items()})

    def truncate(self, m: int) -> 'LaurentPolynomial':
        """Drop trailing variables m+1..n, which must not occur"""
        if not 1 <= m <= self._n:
            raise DimensionError(f"cannot truncate {self._n} variables to {m}")
        for exponent in self._terms:
            if any(exponent[m:]):
                raise DimensionError(f"variable beyond x{m} occurs in exponent {exponent}")
        return LaurentPolynomial(m, {e[:m]: c for e, c in self._terms.items()})

    def map_exponents(self, transform) -> 'LaurentPolynomial':
        """Apply an exponent map, combining terms that collide"""
        items = [(transform(e), c) for e, c in self._terms.items()]
        n = len(items[0][0]) if items else self._n
        return LaurentPolynomial.from_terms(n, items)

    # ==================== Operators ====================

    def _coerce(self, other) -> 'LaurentPolynomial':
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(other, self._n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __neg__(self) -> 'LaurentPolynomial':
        return LaurentPolynomial(self._n, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'LaurentPolynomial':
        if k < 0:
            if not self.is_monomial():
                raise LaurentError("negative powers are defined for monomials only")
            (exponent, coeff), = self._terms.items()
            return LaurentPolynomial(self._n, {tuple(k * e for e in exponent): Fraction(1) / coeff ** -k})
        result = LaurentPolynomial.constant(1, self._n)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self._n)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_canonical(self)

    def __repr__(self) -> str:
        return f"LaurentPolynomial(n={self._n}, '{format_canonical(self)}')"


# ==================== Ring operations ====================

def _check_same_n(f: LaurentPolynomial, g: LaurentPolynomial) -> None:
    if f.n != g.n:
        raise DimensionError(f"variable counts differ: {f.n} vs {g.n}")


def add(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """
    Coefficient-wise sum

    Args:
        f: First summand
        g: Second summand, same variable count

    Returns:
        f + g with cancelled terms removed
    """
    _check_same_n(f, g)
    acc = f.terms
    for exponent, coeff in g.items():
        acc[exponent] = acc.get(exponent, Fraction(0)) + coeff
    return LaurentPolynomial(f.n, acc)


def sub(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    _check_same_n(f, g)
    acc = f.terms
    for exponent, coeff in g.items():
        acc[exponent] = acc.get(exponent, Fraction(0)) - coeff
    return LaurentPolynomial(f.n, acc)


def scale(f: LaurentPolynomial, c: Scalar) -> LaurentPolynomial:
    c = Fraction(c)
    return LaurentPolynomial(f.n, {e: c * v for e, v in f.items()})


def mul(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """
    Product by convolution: exponent vectors add componentwise

    Args:
        f: First factor
        g: Second factor, same variable count

    Returns:
        f * g
    """
    _check_same_n(f, g)
    acc: Dict[Exponent, Fraction] = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            acc[key] = acc.get(key, Fraction(0)) + c1 * c2
    return LaurentPolynomial(f.n, acc)


def exact_divide(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """
    Exact quotient f / g in the Laurent ring

    Peels leading terms off f. Every quotient exponent must lie in the box
    given by the per-variable degree bounds of f and g, which bounds the loop.

    Raises:
        ExactDivisionError: g is zero or does not divide f
    """
    _check_same_n(f, g)
    if g.is_zero():
        raise ExactDivisionError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPolynomial.zero(f.n)
    lead_g, coeff_g = g.leading_term()
    if g.is_monomial():
        return LaurentPolynomial(f.n, {
            tuple(a - b for a, b in zip(e, lead_g)): c / coeff_g for e, c in f.items()
        })

    box = [
        (fmin - gmin, fmax - gmax)
        for (fmin, fmax), (gmin, gmax) in zip(f.degree_bounds(), g.degree_bounds())
    ]
    quotient: Dict[Exponent, Fraction] = {}
    remainder = f.terms
    while remainder:
        lead_r = max(remainder)
        step = tuple(a - b for a, b in zip(lead_r, lead_g))
        if any(not lo <= s <= hi for s, (lo, hi) in zip(step, box)):
            raise ExactDivisionError(f"{format_canonical(g)} does not divide {format_canonical(f)}")
        coeff = remainder[lead_r] / coeff_g
        quotient[step] = coeff
        for exponent, c in g.items():
            key = tuple(a + b for a, b in zip(step, exponent))
            value = remainder.get(key, 0) - coeff * c
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    return LaurentPolynomial(f.n, quotient)


def evaluate(f: LaurentPolynomial, point: Sequence[Scalar]) -> Fraction:
    """
    Exact value of f at a torus point

    Args:
        f: Polynomial
        point: n nonzero rational coordinates

    Returns:
        Sum of a_I * point^I
    """
    if len(point) != f.n:
        raise DimensionError(f"point has {len(point)} coordinates, expected {f.n}")
    coords = [Fraction(p) for p in point]
    if any(p == 0 for p in coords):
        raise TorusPointError(f"point {format_point(coords)} has a zero coordinate")
    total = Fraction(0)
    for exponent, coeff in f.items():
        value = coeff
        for p, e in zip(coords, exponent):
            if e:
                value *= p ** e
        total += value
    return total


# ==================== Formatting ====================

def format_rational(value: Fraction) -> str:
    """'p' for integers, 'p/q' otherwise"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_point(point: Iterable[Scalar]) -> str:
    return "(" + ", ".join(format_rational(Fraction(p)) for p in point) + ")"


def _format_monomial(exponent: Exponent) -> str:
    factors = []
    for index, e in enumerate(exponent, start=1):
        if e == 0:
            continue
        factors.append(f"x{index}" if e == 1 else f"x{index}^{e}")
    return "*".join(factors)


def format_canonical(f: LaurentPolynomial) -> str:
    """
    Canonical text form

    Terms run in descending lexicographic order of exponents; a unit
    coefficient is omitted before a monomial, exponent 1 is omitted and the
    zero polynomial prints as "0". The output reparses to f.
    """
    if f.is_zero():
        return "0"
    parts: List[str] = []
    for exponent in f.exponents():
        coeff = f.coefficient(exponent)
        magnitude = abs(coeff)
        monomial = _format_monomial(exponent)
        if not monomial:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{format_rational(magnitude)}*{monomial}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)
