"""Tests for Lie algebras, catalog labels and structural invariants."""

import pytest
from sympy import Rational

from src.classify import STANDARD_LABELS
from src.errors import DocumentError, ParameterRangeError, ShapeError
from src.exactnum import mat, unit
from src.liealg import (
    CatalogLabel,
    Family,
    LieAlgebra,
    catalog_build,
    center,
    check_jacobi,
    derived_subalgebra,
    in_canonical_basis,
    invariant_wedge_subspace,
    is_lie_algebra,
    is_nilpotent,
    killing_form,
    wedge,
    wedge_index,
)


# -- Helpers ---------------------------------------------------------------


def _make_broken() -> LieAlgebra:
    """[e1,e2] = e3, [e1,e3] = e1 violates Jacobi."""
    return LieAlgebra.from_brackets(("e1", "e2", "e3"), {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0]})


class TestCatalogLabel:
    def test_lambda_ranges(self):
        with pytest.raises(ParameterRangeError):
            CatalogLabel(Family.R3_LAMBDA, Rational(2))
        with pytest.raises(ParameterRangeError):
            CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(-1))
        with pytest.raises(ParameterRangeError):
            CatalogLabel(Family.R3_LAMBDA)
        with pytest.raises(ParameterRangeError):
            CatalogLabel(Family.H3, Rational(1))

    def test_parse(self):
        assert CatalogLabel.parse("r3lambda,lambda=1/2") == CatalogLabel(Family.R3_LAMBDA, Rational(1, 2))
        assert CatalogLabel.parse("SU2") == CatalogLabel(Family.SU2)
        with pytest.raises(ParameterRangeError):
            CatalogLabel.parse("so3")

    def test_name_and_dim(self):
        label = CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(2))
        assert label.name == "R3PrimeLambda(lambda=2)"
        assert label.dim == 3
        assert CatalogLabel(Family.AFF2).dim == 2

    def test_from_dict_unknown_family(self):
        with pytest.raises(DocumentError):
            CatalogLabel.from_dict({"family": "E8"})


class TestLieAlgebra:
    def test_rejects_four_dimensions(self):
        with pytest.raises(ShapeError):
            LieAlgebra.from_brackets(("a", "b", "c", "d"), {})

    def test_rejects_non_antisymmetric_constants(self):
        zero = Rational(0)
        c = (((zero, Rational(1)), (Rational(1), zero)), ((zero, zero), (zero, zero)))
        with pytest.raises(ShapeError):
            LieAlgebra(c=c, basis_names=("a", "b"))

    def test_bracket_convention(self):
        g = catalog_build(CatalogLabel(Family.R3))
        x, y, h = unit(3, 0), unit(3, 1), unit(3, 2)
        assert g.bracket(h, y) == x + y
        assert g.bracket(y, h) == -(x + y)

    def test_document_round_trip(self):
        g = catalog_build(CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(1, 3)))
        again = LieAlgebra.from_dict(g.to_dict())
        assert again == g
        assert again.label == g.label

    def test_from_dict_reversed_pair(self):
        g = LieAlgebra.from_dict({"dim": 2, "basis": ["h", "x"], "brackets": [{"i": 1, "j": 0, "coeffs": [0, -1]}]})
        assert in_canonical_basis(g, CatalogLabel(Family.AFF2))

    @pytest.mark.parametrize(
        "doc",
        [
            {"dim": 4},
            {"dim": 2, "basis": ["h"]},
            {"dim": 2, "brackets": [{"i": 0, "j": 0, "coeffs": [1, 0]}]},
            {"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": [1]}]},
            {"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": [0.5, 0]}]},
            {"dim": 2, "label": {"family": "H3"}},
        ],
    )
    def test_from_dict_rejects(self, doc):
        with pytest.raises(DocumentError):
            LieAlgebra.from_dict(doc)


class TestCatalog:
    @pytest.mark.parametrize("label", STANDARD_LABELS, ids=lambda l: l.name)
    def test_every_catalog_algebra_satisfies_jacobi(self, label):
        assert is_lie_algebra(catalog_build(label))

    def test_broken_tensor_fails_jacobi(self):
        residuals = check_jacobi(_make_broken())
        assert residuals == [mat([[0], [0], [-1]])]
        assert not is_lie_algebra(_make_broken())


class TestInvariants:
    def test_h3(self):
        g = catalog_build(CatalogLabel(Family.H3))
        assert center(g) == [unit(3, 2)]
        assert derived_subalgebra(g) == [unit(3, 2)]
        assert is_nilpotent(g)

    def test_r3(self):
        g = catalog_build(CatalogLabel(Family.R3))
        assert len(derived_subalgebra(g)) == 2
        assert center(g) == []
        assert not is_nilpotent(g)

    def test_killing_forms(self):
        su2 = catalog_build(CatalogLabel(Family.SU2))
        sl2 = catalog_build(CatalogLabel(Family.SL2R))
        assert killing_form(su2) == mat([[-2, 0, 0], [0, -2, 0], [0, 0, -2]])
        assert killing_form(sl2) == mat([[2, 0, 0], [0, 2, 0], [0, 0, -2]])

    @pytest.mark.parametrize(
        "label, expected",
        [
            (CatalogLabel(Family.H3), 2),
            (CatalogLabel(Family.R3), 0),
            (CatalogLabel(Family.R3_LAMBDA, Rational(-1)), 1),
            (CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(0)), 1),
            (CatalogLabel(Family.SU2), 0),
        ],
        ids=lambda v: getattr(v, "name", str(v)),
    )
    def test_invariant_bivectors(self, label, expected):
        assert len(invariant_wedge_subspace(catalog_build(label))) == expected

    def test_wedge_convention(self):
        assert wedge_index(1, 0, 3) == (0, -1)
        assert wedge_index(0, 2, 3) == (2, -1)
        assert wedge(unit(3, 2), unit(3, 0)) == unit(3, 2)
