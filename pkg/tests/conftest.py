"""Shared fixtures and hypothesis strategies"""

from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from src.algebra import LaurentPolynomial, PolyMatrix, parse_laurent

settings.register_profile("loghesse", max_examples=60, deadline=None)
settings.load_profile("loghesse")


def nonzero_fractions(bound: int = 9):
    """Nonzero small rationals"""
    return st.builds(
        Fraction,
        st.integers(-bound, bound).filter(bool),
        st.integers(1, bound),
    )


@st.composite
def laurent_polys(draw, n: int = 2, max_terms: int = 4, exponent_bound: int = 3):
    """Random sparse Laurent polynomial in n variables (possibly zero)"""
    exponents = st.tuples(*[st.integers(-exponent_bound, exponent_bound)] * n)
    terms = draw(st.dictionaries(exponents, nonzero_fractions(), max_size=max_terms))
    return LaurentPolynomial(n, terms)


@st.composite
def poly_matrices(draw, n: int = 3, max_size: int = 4):
    """Square polynomial matrix; about half the time its last row depends on the others"""
    size = draw(st.integers(1, max_size))
    entries = laurent_polys(n=n, max_terms=3, exponent_bound=2)
    rows = [[draw(entries) for _ in range(size)] for _ in range(size)]
    if size > 1 and draw(st.booleans()):
        factor = draw(laurent_polys(n=n, max_terms=2, exponent_bound=1))
        rows[-1] = [factor * a for a in rows[0]]
        if size > 2:
            rows[-1] = [a + b for a, b in zip(rows[-1], rows[1])]
    return PolyMatrix.from_rows(rows, nvars=n)


def integer_matrices(max_rows: int = 4, max_cols: int = 4, bound: int = 9):
    return st.integers(1, max_cols).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-bound, bound), min_size=cols, max_size=cols),
            min_size=1, max_size=max_rows,
        )
    )


@pytest.fixture
def parse():
    """parse_laurent with the variable count first, for readable tests"""
    def _parse(n: int, text: str) -> LaurentPolynomial:
        return parse_laurent(text, n)
    return _parse


@pytest.fixture
def perazzo():
    return parse_laurent("x1^2*x3 + x1*x2*x4 + x2^2*x5", 5)
