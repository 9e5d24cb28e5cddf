"""Shared hypothesis strategies for exact rational data."""

from __future__ import annotations

from hypothesis import strategies as st
from sympy import ImmutableMatrix, Rational

from src.liealg import CatalogLabel, Family


def rationals(numerator: int = 9, denominator: int = 6) -> st.SearchStrategy[Rational]:
    return st.builds(Rational, st.integers(-numerator, numerator), st.integers(1, denominator))


def nonzero_rationals() -> st.SearchStrategy[Rational]:
    return rationals().filter(lambda v: v != 0)


def matrices(rows: int, cols: int) -> st.SearchStrategy[ImmutableMatrix]:
    return st.lists(rationals(), min_size=rows * cols, max_size=rows * cols).map(
        lambda values: ImmutableMatrix(rows, cols, values)
    )


def invertible_matrices(n: int) -> st.SearchStrategy[ImmutableMatrix]:
    return matrices(n, n).filter(lambda m: m.det() != 0)


def vectors(n: int) -> st.SearchStrategy[ImmutableMatrix]:
    return matrices(n, 1)


def symmetric_matrices(n: int) -> st.SearchStrategy[ImmutableMatrix]:
    return matrices(n, n).map(lambda m: ImmutableMatrix((m + m.T) / 2))


THREE_DIMENSIONAL_LABELS = (
    CatalogLabel(Family.ABELIAN3),
    CatalogLabel(Family.H3),
    CatalogLabel(Family.R3),
    CatalogLabel(Family.R3_LAMBDA, Rational(1, 2)),
    CatalogLabel(Family.R3_LAMBDA, Rational(-1)),
    CatalogLabel(Family.R3_LAMBDA, Rational(1)),
    CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(0)),
    CatalogLabel(Family.R3_PRIME_LAMBDA, Rational(2)),
    CatalogLabel(Family.SU2),
    CatalogLabel(Family.SL2R),
)


def three_dimensional_labels() -> st.SearchStrategy[CatalogLabel]:
    return st.sampled_from(THREE_DIMENSIONAL_LABELS)
