"""Tests for recognition and classification of low-dimensional bialgebras."""

import logging

import pytest
from hypothesis import given, settings
from sympy import Rational

from src.autact import pullback
from src.bialg import Cobracket, LieBialgebra, quotient_bialgebra
from src.classify import (
    ClassTag,
    classify,
    classify2,
    classify3,
    classify_matrix,
    classify_with_witness,
    recognize,
    representative,
    trivial_tag,
)
from src.classify.engine import witness_holds
from src.classify.recognize import LAMBDA2, TRACE2_OVER_DET, IrrationalLabel, recognize_class
from src.classify.tags import INNER_AUTOMORPHISMS_ONLY, OUTSIDE_PUBLISHED_LIST
from src.cohom import coboundary_of
from src.errors import RecognitionError, ShapeError
from src.exactnum import identity, mat, unit
from src.liealg import CatalogLabel, Family, LieAlgebra, catalog_build
from tests.strategies import invertible_matrices, rationals

H3 = CatalogLabel(Family.H3)
R3 = CatalogLabel(Family.R3)
R3_ONE = CatalogLabel(Family.R3_LAMBDA, Rational(1))
R3_MINUS_ONE = CatalogLabel(Family.R3_LAMBDA, Rational(-1))
R3_PRIME_ZERO = CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(0))
SU2 = CatalogLabel(Family.SU2)
SL2R = CatalogLabel(Family.SL2R)
AFF2 = CatalogLabel(Family.AFF2)
AB3 = CatalogLabel(Family.ABELIAN3)


# -- Helpers ---------------------------------------------------------------


def _make(label: CatalogLabel, rows) -> LieBialgebra:
    return LieBialgebra(catalog_build(label), Cobracket.from_rows(rows))


def _make_sl2_other_basis() -> LieAlgebra:
    """sl(2,R) on (h, x, y): [h,x] = 2x, [h,y] = -2y, [x,y] = h."""
    return LieAlgebra.from_brackets(("h", "x", "y"), {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]})


class TestRecognize:
    def test_canonical_label_is_trusted(self):
        assert recognize(catalog_build(R3_ONE)) == R3_ONE

    def test_sl2_in_another_basis(self):
        assert recognize(_make_sl2_other_basis()) == SL2R

    def test_su2_in_another_basis(self):
        g = LieAlgebra.from_brackets(("a", "b", "c"), {(0, 1): [0, 0, 2], (1, 2): [2, 0, 0], (2, 0): [0, 2, 0]})
        assert recognize(g) == SU2

    def test_solvable_with_real_eigenvalues(self):
        g = LieAlgebra.from_brackets(("e1", "e2", "e3"), {(0, 1): [0, 1, 0], (0, 2): [0, 0, Rational(1, 2)]})
        assert recognize(g) == CatalogLabel(Family.R3_LAMBDA, Rational(1, 2))

    def test_irrational_eigenvalues_are_declined(self):
        g = LieAlgebra.from_brackets(("e1", "e2", "e3"), {(0, 1): [0, 1, 1], (0, 2): [0, 1, 0]})
        with pytest.raises(RecognitionError, match=r"R3Lambda\(trace2_over_det=-1\)"):
            recognize(g)
        assert recognize_class(g) == IrrationalLabel(Family.R3_LAMBDA, TRACE2_OVER_DET, Rational(-1))

    def test_trace_free_action_is_minus_one(self):
        # ad_h has eigenvalues +-sqrt(2)
        g = LieAlgebra.from_brackets(("x", "y", "h"), {(2, 0): [0, 1, 0], (2, 1): [2, 0, 0]})
        assert recognize(g) == R3_MINUS_ONE

    def test_catalog_algebras_without_their_label(self):
        for label in (H3, R3, R3_ONE, R3_MINUS_ONE, CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(1)), SU2, SL2R):
            assert recognize(catalog_build(label).with_label(None)) == label
        assert recognize(catalog_build(CatalogLabel(Family.R3_LAMBDA, Rational(0))).with_label(None)).lam == 0

    def test_broken_algebra(self):
        g = LieAlgebra.from_brackets(("e1", "e2", "e3"), {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0]})
        with pytest.raises(RecognitionError):
            recognize(g)


class TestTwoDimensional:
    @settings(max_examples=60, deadline=None)
    @given(rationals(), rationals(), rationals(), rationals())
    def test_trace_of_derivation_is_the_invariant(self, a, b, c, d):
        g = LieAlgebra.from_brackets(("h", "x"), {(0, 1): [a, b]})
        tag = classify2(LieBialgebra(g, Cobracket.from_rows([[c, d]])))
        if c == 0 and d == 0:
            assert tag.is_trivial
        elif a == 0 and b == 0:
            assert tag.case_id == "AB2-1"
        elif a * c + b * d == 0:
            assert tag.case_id == "AFF2-0"
        else:
            assert tag == ClassTag.make(AFF2, "AFF2-MU", {"mu": a * c + b * d})

    @pytest.mark.parametrize(
        "bracket, rows, case",
        [
            ([0, 1], [[3, 2]], "AFF2-MU"),
            ([0, 1], [[3, 0]], "AFF2-0"),
            ([0, 0], [[3, 2]], "AB2-1"),
            ([0, 0], [[0, 2]], "AB2-1"),
        ],
    )
    def test_witness_in_catalog_basis(self, bracket, rows, case):
        label = CatalogLabel(Family.AFF2 if any(bracket) else Family.ABELIAN2)
        result = classify_with_witness(LieBialgebra(catalog_build(label), Cobracket.from_rows(rows)))
        assert result.tag.case_id == case
        assert result.witness is not None
        assert pullback(result.witness, Cobracket.from_rows(rows)) == representative(result.tag)

    def test_dimension_is_checked(self):
        with pytest.raises(ShapeError):
            classify2(_make(SU2, [[0, 0, 0], [0, 1, 0], [-1, 0, 0]]))
        with pytest.raises(ShapeError):
            classify3(_make(AFF2, [[1, 0]]))


class TestSimple:
    def test_su2_r100(self):
        result = classify_with_witness(_make(SU2, [[0, 0, 0], [0, 1, 0], [-1, 0, 0]]))
        assert result.tag == ClassTag.make(SU2, "SU2", {"norm2": 1})
        assert result.witness is not None
        assert result.witness.phi == identity(3)

    def test_su2_rotated_to_representative(self):
        g = catalog_build(SU2)
        delta = coboundary_of(g, mat([[0], [3], [4]]))
        result = classify_with_witness(LieBialgebra(g, delta))
        assert result.tag.param("norm2") == 25
        assert pullback(result.witness, delta) == representative(result.tag)

    def test_su2_irrational_norm_has_no_witness(self):
        g = catalog_build(SU2)
        result = classify_with_witness(LieBialgebra(g, coboundary_of(g, mat([[1], [1], [0]]))))
        assert result.tag.param("norm2") == 2
        assert result.witness is None
        assert not result.tag.witness_available

    @pytest.mark.parametrize(
        "r, case",
        [((0, 1, 0), "SL2-BETA"), ((2, 1, 0), "SL2-ALPHA"), ((1, 0, 1), "SL2-TRI+"), ((-1, 1, 0), "SL2-TRI-")],
    )
    def test_sl2_orbit_types(self, r, case):
        g = catalog_build(SL2R)
        tag = classify(LieBialgebra(g, coboundary_of(g, mat([[v] for v in r]))))
        assert tag.case_id == case
        assert INNER_AUTOMORPHISMS_ONLY in tag.flags

    def test_sl2_zero_cobracket_carries_flag(self):
        tag = classify(LieBialgebra(catalog_build(SL2R), Cobracket.zero(3)))
        assert tag == trivial_tag(SL2R)
        assert INNER_AUTOMORPHISMS_ONLY in tag.flags


class TestSolvable:
    def test_h3_quotient_case(self):
        delta = Cobracket.from_rows([[0, 1, 0], [0, -2, 0], [2, 3, -1]])
        result = classify_with_witness(LieBialgebra(catalog_build(H3), delta))
        assert result.tag.case_id == "H3-I"
        assert pullback(result.witness, delta) == representative(result.tag)

    def test_h3_symmetric_block(self):
        tag = classify(_make(H3, [[0, 0, 0], [2, 1, 0], [1, -3, 0]]))
        assert tag == ClassTag.make(H3, "H3-II", {"a2": 1, "b3": -1})

    def test_h3_twisted_block_is_flagged(self):
        result = classify_with_witness(_make(H3, [[0, 0, 0], [1, 1, 0], [0, 0, 0]]))
        assert result.tag.case_id == "H3-II"
        assert OUTSIDE_PUBLISHED_LIST in result.tag.flags
        assert result.witness is None
        assert representative(result.tag) is None

    def test_r3_irrational_normalization(self):
        result = classify_with_witness(_make(R3, [[0, 4, 0], [0, 0, 0], [0, 2, 4]]))
        assert result.tag == ClassTag.make(R3, "R3-A", {"b3": 2, "c1_sign": -1})
        assert result.witness is None

    def test_r3_minus_one_uses_the_swap(self):
        delta = Cobracket.from_rows([[1, 2, 0], [0, -3, -1], [3, 0, -2]])
        result = classify_with_witness(LieBialgebra(catalog_build(R3_MINUS_ONE), delta))
        assert result.tag == ClassTag.make(R3_MINUS_ONE, "R3M1-A", {"a3": 3})
        assert pullback(result.witness, delta) == representative(result.tag)

    def test_r3_prime_zero_ratio(self):
        rows = [[Rational(1, 5), Rational(-2, 5), Rational(3, 5)], [0, 0, Rational(-1, 5)], [0, 0, Rational(2, 5)]]
        tag = classify(_make(R3_PRIME_ZERO, rows))
        assert tag == ClassTag.make(R3_PRIME_ZERO, "R3P-C", {"ratio": 3})

    @pytest.mark.parametrize("s", [-1, 0, 1])
    def test_repeated_r3_one_leaves(self, s):
        tag = classify(_make(R3_ONE, [[0, 0, s], [1, 0, 0], [0, 0, 0]]))
        assert tag == ClassTag.make(R3_ONE, "R31-3", {"c1_sign": s})

    def test_repeated_r3_one_quotient_leaf(self):
        tag = classify(_make(R3_ONE, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]))
        assert tag == ClassTag.make(R3_ONE, "R31-2")


class TestAbelianDuals:
    def test_irrational_real_eigenvalues(self):
        b = _make(AB3, [[0, 0, 0], [-1, 0, 0], [1, 1, 0]])
        tag = classify(b)
        assert tag == ClassTag.make(AB3, "AB3-R3Lambda", {TRACE2_OVER_DET: -1})
        assert classify(LieBialgebra(b.g, representative(tag))) == tag

    def test_irrational_rotation(self):
        tag = classify(_make(AB3, [[0, 0, 0], [1, -1, 0], [0, 1, 0]]))
        assert tag == ClassTag.make(AB3, "AB3-R3PrimeLambda", {LAMBDA2: Rational(1, 3)})
        assert representative(tag) is not None

    @settings(max_examples=100, deadline=None)
    @given(invertible_matrices(2), invertible_matrices(3))
    def test_random_duals_are_classified_invariantly(self, a, phi):
        rows = [[0, 0, 0], [-a[0, 1], -a[1, 1], 0], [a[0, 0], a[1, 0], 0]]
        b = _make(AB3, rows)
        tag = classify(b)
        assert classify(LieBialgebra(b.g, pullback(phi, b.delta))) == tag
        assert classify(LieBialgebra(b.g, representative(tag))) == tag


class TestDispatch:
    def test_zero_cobracket_is_trivial_in_any_basis(self):
        result = classify_with_witness(LieBialgebra(_make_sl2_other_basis(), Cobracket.zero(3)))
        assert result.tag.is_trivial
        assert result.witness.phi == identity(3)

    def test_non_canonical_basis_is_declined(self, caplog):
        g = _make_sl2_other_basis()
        b = LieBialgebra(g, coboundary_of(g, unit(3, 1)))
        with caplog.at_level(logging.WARNING, logger="src.classify.engine"):
            with pytest.raises(RecognitionError, match="canonical basis"):
                classify(b)
        assert "not in its catalog basis" in caplog.text

    def test_abelian_cobracket_is_classified_by_its_dual(self):
        tag = classify(_make(CatalogLabel(Family.ABELIAN3), [[0, 0, 1], [0, 0, 0], [0, 0, 0]]))
        assert tag.case_id == "AB3-H3"

    def test_quotient_by_derived_algebra(self):
        nonzero = quotient_bialgebra(_make(H3, [[0, 1, 0], [0, 0, 0], [0, 2, -1]]))
        zero = quotient_bialgebra(_make(H3, [[0, 0, 0], [1, 0, 0], [0, -1, 0]]))
        assert classify2(nonzero).case_id == "AB2-1"
        assert classify2(zero).is_trivial

    def test_classify_matrix_returns_identity_for_zero(self):
        g = catalog_build(R3)
        tag, phi = classify_matrix(g, R3, Cobracket.zero(3).m)
        assert tag == trivial_tag(R3)
        assert phi == identity(3)

    def test_witness_holds_rejects_wrong_matrix(self):
        g = catalog_build(R3)
        delta = Cobracket.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 1]])
        tag = ClassTag.make(R3, "R3-B")
        assert witness_holds(g, tag, delta.m, identity(3))
        assert not witness_holds(g, tag, delta.m, mat([[1, 0, 0], [0, 1, 0], [0, 0, 2]]))
        assert not witness_holds(g, tag, delta.m, mat([[1, 0, 0], [0, 0, 0], [0, 0, 1]]))

    def test_class_tag_document(self):
        tag = ClassTag.make(R3_MINUS_ONE, "R3M1-B2", {"ratio": Rational(-2, 3)})
        d = tag.to_dict()
        assert d["params"] == {"ratio": "-2/3"}
        assert ClassTag.from_dict(d) == tag
        assert tag.render() == "R3Lambda(lambda=-1) R3M1-B2 ratio=-2/3"
