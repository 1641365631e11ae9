"""Tests for the torus reduction engine"""

from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.algebra import DimensionError, LaurentPolynomial, evaluate, logarithmic_polar_map
from src.analysis import (
    ReductionCheck,
    ReductionError,
    TorusAutomorphism,
    build_automorphism,
    coset_invariance_at_point,
    coset_invariance_check,
    hessian_rank_certified,
    monomial_substitute,
    orthogonal_lattice,
    reduce_variables,
    subgroup_point,
    support_lattice,
    verify_reduction,
)
from src.data import random_unimodular
from src.lattice import LatticeBasis, integer_det
from tests.conftest import laurent_polys, nonzero_fractions


def unimodular(seed, n):
    return TorusAutomorphism.from_matrix(random_unimodular(np.random.default_rng(seed), n))


class TestSupportLattice:

    def test_examples(self, parse):
        assert support_lattice(parse(2, "x1*x2 + x1^2*x2^2")).vectors == ((1, 1),)
        assert support_lattice(parse(2, "x1 + x2")).rank == 2
        assert support_lattice(parse(2, "7")).rank == 0
        assert support_lattice(LaurentPolynomial.zero(3)).rank == 0

    def test_orthogonal(self, parse):
        lam = support_lattice(parse(3, "x1*x2^-1 + x2*x3^-1"))
        M = orthogonal_lattice(lam)
        assert M.vectors == ((1, 1, 1),)
        assert lam.is_orthogonal_to(M)


class TestCertifiedRank:

    def test_examples(self, parse):
        assert hessian_rank_certified(parse(2, "x1*x2")) == 1
        assert hessian_rank_certified(parse(2, "x1 + x2 + x1*x2")) == 2
        assert hessian_rank_certified(parse(3, "-4/3")) == 0

    def test_fallback_without_random_points(self, parse):
        assert hessian_rank_certified(parse(3, "x1*x2 + x2*x3 + x1^-1"), retries=0) == 3

    @given(laurent_polys(n=3))
    def test_equals_support_rank(self, f):
        assert hessian_rank_certified(f) == support_lattice(f).rank


class TestAutomorphism:

    def test_examples(self):
        phi = build_automorphism(LatticeBasis.from_vectors(2, [(1, 1)]), LatticeBasis.from_vectors(2, [(1, -1)]))
        assert abs(integer_det(phi.A)) == 1
        assert tuple(row[1] for row in phi.A) == (1, -1)

        phi = build_automorphism(LatticeBasis.from_vectors(2, [(1, -1)]), LatticeBasis.from_vectors(2, [(1, 1)]))
        assert tuple(row[1] for row in phi.A) == (1, 1)

    def test_full_rank_gives_identity(self):
        phi = build_automorphism(LatticeBasis.from_vectors(2, [(1, 0), (0, 1)]), LatticeBasis.empty(2))
        assert phi == TorusAutomorphism.identity(2)

    def test_rejects_bad_input(self):
        lam = LatticeBasis.from_vectors(2, [(1, 1)])
        with pytest.raises(ReductionError):
            build_automorphism(lam, LatticeBasis.from_vectors(2, [(1, 1)]))
        with pytest.raises(ReductionError):
            build_automorphism(lam, LatticeBasis.empty(2))
        with pytest.raises(ReductionError):
            build_automorphism(lam, LatticeBasis.from_vectors(2, [(2, -2)]))

    def test_from_matrix_rejects_singular(self):
        with pytest.raises(ReductionError):
            TorusAutomorphism.from_matrix([[2, 0], [0, 1]])

    def test_compose_and_inverse(self):
        a, b = unimodular(1, 3), unimodular(2, 3)
        ab = a.compose(b)
        assert ab.is_valid()
        assert a.compose(a.inverse()) == TorusAutomorphism.identity(3)
        assert ab.inverse() == b.inverse().compose(a.inverse())


class TestSubstitution:

    def test_examples(self, parse):
        swap = TorusAutomorphism.from_matrix([[0, 1], [1, 0]])
        assert monomial_substitute(parse(2, "x1^2*x2"), swap) == parse(2, "x2^2*x1")
        phi = TorusAutomorphism.from_matrix([[1, 1], [0, -1]])
        assert monomial_substitute(parse(2, "x1*x2 + x1^2*x2^2"), phi) == parse(2, "x1 + x1^2")
        f = parse(2, "3*x1^-1 + x2")
        assert monomial_substitute(f, TorusAutomorphism.identity(2)) == f

    def test_dimension_mismatch(self, parse):
        with pytest.raises(DimensionError):
            monomial_substitute(parse(3, "x1"), TorusAutomorphism.identity(2))

    @settings(max_examples=100)
    @given(laurent_polys(n=3), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    def test_functor_law(self, f, seed_a, seed_b):
        a, b = unimodular(seed_a, 3), unimodular(seed_b, 3)
        stepwise = monomial_substitute(monomial_substitute(f, a), b)
        assert stepwise == monomial_substitute(f, a.compose(b))
        assert len(monomial_substitute(f, a)) == len(f)

    @given(laurent_polys(n=2), st.lists(nonzero_fractions(), min_size=2, max_size=2), st.integers(0, 1000))
    def test_pullback_is_composition_with_point_map(self, f, point, seed):
        phi = unimodular(seed, 2)
        assert evaluate(monomial_substitute(f, phi), point) == evaluate(f, phi.apply_to_point(point))


class TestReduceVariables:

    def test_worked_example(self, parse):
        f = parse(2, "x1*x2 + x1^2*x2^2")
        result = reduce_variables(f)
        assert (result.r, result.k) == (1, 1)
        assert result.verified
        assert result.reduced in (parse(2, "x1 + x1^2"), parse(2, "x1^-1 + x1^-2"))
        assert result.reduced_in_fewer_variables().n == 1

    def test_inverse_pair(self, parse):
        result = reduce_variables(parse(2, "x1*x2^-1 + x2*x1^-1"))
        assert result.k == 1
        assert result.m_basis.vectors == ((1, 1),)
        assert result.reduced == parse(2, "x1 + x1^-1")

    def test_full_rank(self, parse):
        f = parse(2, "x1 + x2")
        result = reduce_variables(f)
        assert result.k == 0
        assert result.reduced == f
        assert result.automorphism == TorusAutomorphism.identity(2)

    def test_constant_and_zero(self, parse):
        result = reduce_variables(parse(3, "5/2"))
        assert (result.k, result.hessian_rank) == (3, 0)
        assert result.reduced == parse(3, "5/2")
        assert result.reduced_in_fewer_variables() == LaurentPolynomial.constant(Fraction(5, 2), 1)
        zero = reduce_variables(LaurentPolynomial.zero(2))
        assert zero.k == 2 and zero.reduced.is_zero() and zero.verified

    def test_perazzo_has_three_torus_variables(self, perazzo):
        result = reduce_variables(perazzo)
        assert (result.r, result.k, result.hessian_rank) == (3, 2, 3)
        assert result.verified
        assert result.reduced_in_fewer_variables().n == 3

    @given(laurent_polys(n=3, max_terms=5))
    def test_soundness(self, f):
        result = reduce_variables(f)
        assert result.verified
        assert result.r + result.k == result.n
        for exponent in result.reduced.exponents():
            assert not any(exponent[result.n - result.k:])
        assert monomial_substitute(result.reduced, result.automorphism.inverse()) == f

    @given(laurent_polys(n=3, max_terms=5), st.integers(0, 1000))
    def test_k_invariant_under_monoidal_change(self, f, seed):
        u = unimodular(seed, 3)
        assert reduce_variables(monomial_substitute(f, u)).k == reduce_variables(f).k


class TestVerify:

    def test_accepts_reduction(self, parse):
        f = parse(3, "x1*x2^-1 + 2*x2*x3^-1 - 1")
        result = reduce_variables(f)
        assert verify_reduction(f, result)

    def test_inflated_k(self, parse):
        f = parse(2, "x1*x2 + x1^2*x2^2")
        result = reduce_variables(f)
        outcome = verify_reduction(f, replace(result, k=result.k + 1))
        assert not outcome
        assert "b" in outcome.reasons
        assert ReductionCheck.ELIMINATED in outcome.failed

    def test_determinant_two(self, parse):
        f = parse(2, "x1*x2 + x1^2*x2^2")
        result = reduce_variables(f)
        bad = TorusAutomorphism(((2, 0), (0, 1)), ((1, 0), (0, 1)))
        outcome = verify_reduction(f, replace(result, automorphism=bad))
        assert not outcome
        assert "a" in outcome.reasons

    def test_wrong_reduced_polynomial(self, parse):
        f = parse(2, "x1*x2 + x1^2*x2^2")
        result = reduce_variables(f)
        outcome = verify_reduction(f, replace(result, reduced=result.reduced + 1))
        assert outcome.reasons == ["c"]

    def test_wrong_rank(self, parse):
        f = parse(2, "x1*x2")
        result = reduce_variables(f)
        outcome = verify_reduction(f, replace(result, hessian_rank=2))
        assert outcome.reasons == ["d"]


class TestCosets:

    def test_examples(self, parse):
        f = parse(2, "x1*x2")
        assert coset_invariance_check(f, LatticeBasis.from_vectors(2, [(1, -1)]))
        assert coset_invariance_check(parse(2, "x1 + x2"), LatticeBasis.empty(2))
        assert not coset_invariance_check(f, LatticeBasis.from_vectors(2, [(1, 1)]))

    def test_dimension_mismatch(self, parse):
        with pytest.raises(DimensionError):
            coset_invariance_check(parse(2, "x1"), LatticeBasis.empty(3))

    @given(laurent_polys(n=3))
    def test_holds_for_computed_orthogonal(self, f):
        assert coset_invariance_check(f, reduce_variables(f).m_basis)

    def test_subgroup_point(self):
        M = LatticeBasis.from_vectors(3, [(1, 1, 1)])
        assert subgroup_point(M, [2]) == (2, 2, 2)
        with pytest.raises(DimensionError):
            subgroup_point(M, [2, 3])

    @given(laurent_polys(n=3), st.lists(nonzero_fractions(), min_size=3, max_size=3), nonzero_fractions())
    def test_polar_map_constant_on_cosets(self, f, x, t):
        m_basis = reduce_variables(f).m_basis
        params = [t] * m_basis.rank
        assert coset_invariance_at_point(f, m_basis, x, params)

    def test_numeric_check_detects_motion(self, parse):
        f = parse(2, "x1 + x2")
        M = LatticeBasis.from_vectors(2, [(1, 0)])
        assert not coset_invariance_at_point(f, M, [1, 1], [2])
        assert logarithmic_polar_map(f)[0] == parse(2, "x1")
