"""Tests for cocycle and coboundary spaces and the H^1 table."""

import pytest
from sympy import Rational

from src.bialg import RMatrix, coboundary_from_r, is_cocycle
from src.cohom import (
    H1_COLUMNS,
    PUBLISHED_H1,
    coboundary_basis,
    coboundary_of,
    cocycle_space,
    h1_report,
    h1_table,
)
from src.exactnum import column
from src.liealg import CatalogLabel, Family, catalog_build


def _column_label(column_name: str) -> CatalogLabel:
    family, fixed = next((f, lam) for name, f, lam in H1_COLUMNS if name == column_name)
    if fixed is not None:
        return CatalogLabel(family, Rational(fixed))
    if family is Family.R3_LAMBDA:
        return CatalogLabel(family, Rational(1, 3))
    if family is Family.R3_PRIME_LAMBDA:
        return CatalogLabel(family, Rational(3))
    return CatalogLabel(family)


class TestH1Report:
    @pytest.mark.parametrize("column_name", list(PUBLISHED_H1))
    def test_dimensions_match_the_table(self, column_name):
        report = h1_report(catalog_build(_column_label(column_name)))
        assert report.dims() == PUBLISHED_H1[column_name]

    def test_abelian(self):
        report = h1_report(catalog_build(CatalogLabel(Family.ABELIAN3)))
        assert report.dims() == (3, 0, 9, 9)

    def test_plane_algebras(self):
        assert h1_report(catalog_build(CatalogLabel(Family.ABELIAN2))).dims() == (1, 0, 2, 2)
        assert h1_report(catalog_build(CatalogLabel(Family.AFF2))).dims() == (0, 1, 2, 1)

    def test_to_dict_with_bases(self):
        d = h1_report(catalog_build(CatalogLabel(Family.SU2))).to_dict(with_bases=True)
        assert d["dim_h1"] == 0
        assert len(d["cocycle_basis"]) == 3
        assert len(d["coboundaries"]) == 3
        assert len(d["coboundaries"][0]["r"]) == 3


class TestSpaces:
    @pytest.mark.parametrize(
        "label",
        [CatalogLabel(Family.H3), CatalogLabel(Family.R3_LAMBDA, Rational(1)), CatalogLabel(Family.SL2R)],
        ids=lambda l: l.name,
    )
    def test_bases_are_cocycles(self, label):
        g = catalog_build(label)
        for d in cocycle_space(g):
            assert is_cocycle(g, d)
        for c in coboundary_basis(g):
            assert is_cocycle(g, c.delta)
            assert coboundary_of(g, c.r) == c.delta

    def test_coboundary_agrees_with_r_matrix(self):
        g = catalog_build(CatalogLabel(Family.SU2))
        assert coboundary_of(g, column([2, -1, 3])) == coboundary_from_r(g, RMatrix.of(2, -1, 3))


class TestH1Table:
    def test_every_row_matches(self):
        rows = h1_table()
        assert all(row.matches_published for row in rows)
        columns = [row.column for row in rows]
        assert columns.count("r3,lambda") == 2
        assert columns.count("h3") == 1

    def test_custom_lambda_values(self):
        rows = h1_table({"R3Lambda": ("1/4",), "R3PrimeLambda": ("5",)})
        lambda_rows = [row for row in rows if row.column in ("r3,lambda", "r'3,lambda")]
        assert [row.label.lam for row in lambda_rows] == [Rational(1, 4), Rational(5)]
        assert all(row.matches_published for row in lambda_rows)

    def test_row_to_dict(self):
        row = h1_table()[0]
        d = row.to_dict()
        assert d["column"] == "h3"
        assert d["label"] == {"family": "H3"}
        assert d["matches_published"] is True
