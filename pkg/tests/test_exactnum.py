"""Tests for exact rational scalars and matrices."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from sympy import ImmutableMatrix, Rational

from src.errors import NotSymmetricError, ShapeError, SingularMatrixError
from src.exactnum import (
    SamplingBounds,
    charpoly_coeffs,
    column_space_basis,
    in_span,
    inverse,
    mat,
    nullspace_basis,
    random_rational,
    rank,
    rat,
    rat_str,
    rational_sqrt,
    solve_exact,
    sym_signature,
    to_rows,
    unit,
)
from tests.strategies import matrices, symmetric_matrices


class TestRat:
    def test_accepts_exact_inputs(self):
        assert rat(3) == Rational(3)
        assert rat("3/4") == Rational(3, 4)
        assert rat(" -2/6 ") == Rational(-1, 3)
        assert rat(Fraction(5, 10)) == Rational(1, 2)
        assert rat(Rational(7, 3)) == Rational(7, 3)

    @pytest.mark.parametrize("value", [0.5, True, "abc", None, [1]])
    def test_rejects_inexact_or_garbage(self, value):
        with pytest.raises(ValueError):
            rat(value)

    def test_rat_str(self):
        assert rat_str(Rational(3, 4)) == "3/4"
        assert rat_str(Rational(-1, 2)) == "-1/2"
        assert rat_str(Rational(4, 2)) == "2"
        assert rat_str(Rational(0)) == "0"


class TestRationalSqrt:
    def test_perfect_squares(self):
        assert rational_sqrt(Rational(9, 4)) == Rational(3, 2)
        assert rational_sqrt(Rational(0)) == 0

    def test_irrational_and_negative(self):
        assert rational_sqrt(Rational(2)) is None
        assert rational_sqrt(Rational(8)) is None
        assert rational_sqrt(Rational(-1)) is None


class TestRandomRational:
    def test_respects_bounds(self):
        rng = random.Random(3)
        bounds = SamplingBounds(numerator_bound=4, denominator_bound=3)
        for _ in range(200):
            v = random_rational(rng, bounds)
            assert abs(v) <= 4
            assert v == 0 or 1 <= v.q <= 3

    def test_nonzero_and_positive(self):
        rng = random.Random(11)
        assert all(random_rational(rng, nonzero=True) != 0 for _ in range(200))
        assert all(random_rational(rng, positive=True) > 0 for _ in range(200))

    def test_deterministic_for_a_seed(self):
        first = [random_rational(random.Random(5)) for _ in range(3)]
        second = [random_rational(random.Random(5)) for _ in range(3)]
        assert first == second


class TestMatrices:
    def test_mat_rejects_ragged_rows(self):
        with pytest.raises(ShapeError):
            mat([[1, 2], [3]])

    def test_to_rows(self):
        assert to_rows(mat([[1, "1/2"], [0, -3]])) == [["1", "1/2"], ["0", "-3"]]

    def test_inverse_of_singular_raises(self):
        with pytest.raises(SingularMatrixError):
            inverse(mat([[1, 2], [2, 4]]))

    def test_solve_exact(self):
        a = mat([[1, 1], [1, 1]])
        assert solve_exact(a, mat([[1], [2]])) is None
        x = solve_exact(a, mat([[2], [2]]))
        assert a * x == mat([[2], [2]])

    def test_charpoly_of_identity(self):
        assert charpoly_coeffs(ImmutableMatrix.eye(2)) == [1, -2, 1]

    def test_span_helpers(self):
        vectors = [unit(3, 0), unit(3, 0) * 2, unit(3, 1)]
        basis = column_space_basis(vectors, 3)
        assert len(basis) == 2
        assert in_span(basis, mat([[3], [-1], [0]]))
        assert not in_span(basis, unit(3, 2))

    @settings(max_examples=50, deadline=None)
    @given(matrices(3, 4))
    def test_nullspace_is_kernel(self, m):
        basis = nullspace_basis(m)
        assert len(basis) == 4 - rank(m)
        for v in basis:
            assert m * v == ImmutableMatrix.zeros(3, 1)


class TestSymSignature:
    def test_diagonal(self):
        assert sym_signature(mat([[1, 0, 0], [0, -2, 0], [0, 0, 0]])) == (1, 1)
        assert sym_signature(mat([[0, 1], [1, 0]])) == (1, 1)

    def test_rejects_non_symmetric(self):
        with pytest.raises(NotSymmetricError):
            sym_signature(mat([[1, 2], [0, 1]]))

    @settings(max_examples=50, deadline=None)
    @given(symmetric_matrices(3))
    def test_signature_counts_rank(self, s):
        pos, neg = sym_signature(s)
        assert pos + neg == rank(s)
