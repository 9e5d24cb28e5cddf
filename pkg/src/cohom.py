"""Cocycles, coboundaries and dim H^1(g, wedge^2 g).

The cocycle condition is linear in the cobracket entries. It is assembled
pair by pair into one stacked system whose kernel is the cocycle space;
coboundaries are the cobrackets ad(r) for r in the wedge square.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from sympy import ImmutableMatrix

from src.bialg import Cobracket, cocycle_residual
from src.exactnum import hstack, nullspace_basis, pivot_indices, rat, to_rows, unit, vstack
from src.liealg import CatalogLabel, Family, LieAlgebra, catalog_build, invariant_wedge_subspace, wedge_action, wedge_dim

logger = logging.getLogger(__name__)


# -- Spaces ------------------------------------------------------------------


def _flatten(d: Cobracket) -> ImmutableMatrix:
    """Column-major coordinates: delta(e_0) first, then delta(e_1), ..."""
    return vstack([d.image(j) for j in range(d.dim)], 1)


def _unflatten(v: ImmutableMatrix, n: int) -> Cobracket:
    big_n = wedge_dim(n)
    cols = [v[j * big_n:(j + 1) * big_n, 0] for j in range(n)]
    return Cobracket(hstack(cols, big_n))


def cocycle_system(g: LieAlgebra) -> ImmutableMatrix:
    """The linear cocycle condition as a matrix acting on flattened cobrackets."""
    n, big_n = g.dim, wedge_dim(g.dim)
    cols = []
    for idx in range(n * big_n):
        basis_delta = _unflatten(unit(n * big_n, idx), n)
        residuals = cocycle_residual(g, basis_delta)
        cols.append(vstack([residuals[pair] for pair in sorted(residuals)], 1))
    rows = big_n * n * (n - 1) // 2
    return hstack(cols, rows)


def cocycle_space(g: LieAlgebra) -> list[Cobracket]:
    """Basis of the 1-cocycles g -> wedge^2 g."""
    system = cocycle_system(g)
    n = g.dim
    if system.rows == 0:
        basis = [unit(n * wedge_dim(n), i) for i in range(n * wedge_dim(n))]
    else:
        basis = nullspace_basis(system)
    logger.debug("cocycle space of dimension %d", len(basis))
    return [_unflatten(v, n) for v in basis]


@dataclass(frozen=True)
class Coboundary:
    """A coboundary ad(r) together with the bivector r that realizes it."""

    r: ImmutableMatrix
    delta: Cobracket

    def to_dict(self) -> dict[str, Any]:
        return {"r": [row[0] for row in to_rows(self.r)], "cobracket": self.delta.to_rows()}


def coboundary_of(g: LieAlgebra, r: ImmutableMatrix) -> Cobracket:
    """delta(e_j) = ad_{e_j}(r) for a wedge-basis vector r in any dimension."""
    n = g.dim
    cols = [wedge_action(g, unit(n, j)) * r for j in range(n)]
    return Cobracket(hstack(cols, wedge_dim(n)))


def coboundary_basis(g: LieAlgebra) -> list[Coboundary]:
    """Independent coboundaries, each stored with its r."""
    big_n = wedge_dim(g.dim)
    candidates = [Coboundary(unit(big_n, k), coboundary_of(g, unit(big_n, k))) for k in range(big_n)]
    flat = [_flatten(c.delta) for c in candidates]
    return [candidates[i] for i in pivot_indices(flat, g.dim * big_n)]


def coboundary_space(g: LieAlgebra) -> list[Cobracket]:
    return [c.delta for c in coboundary_basis(g)]


# -- Reports -----------------------------------------------------------------


@dataclass(frozen=True)
class CohomologyReport:
    dim_invariants: int
    dim_coboundaries: int
    dim_cocycles: int
    dim_h1: int
    cocycle_basis: tuple[Cobracket, ...] = field(default=(), compare=False)
    coboundaries: tuple[Coboundary, ...] = field(default=(), compare=False)

    def dims(self) -> tuple[int, int, int, int]:
        return (self.dim_invariants, self.dim_coboundaries, self.dim_cocycles, self.dim_h1)

    def to_dict(self, with_bases: bool = False) -> dict[str, Any]:
        d: dict[str, Any] = {
            "dim_invariants": self.dim_invariants,
            "dim_coboundaries": self.dim_coboundaries,
            "dim_cocycles": self.dim_cocycles,
            "dim_h1": self.dim_h1,
        }
        if with_bases:
            d["cocycle_basis"] = [c.to_rows() for c in self.cocycle_basis]
            d["coboundaries"] = [c.to_dict() for c in self.coboundaries]
        return d


def h1_report(g: LieAlgebra) -> CohomologyReport:
    invariants = invariant_wedge_subspace(g)
    cocycles = cocycle_space(g)
    coboundaries = coboundary_basis(g)
    report = CohomologyReport(
        dim_invariants=len(invariants),
        dim_coboundaries=len(coboundaries),
        dim_cocycles=len(cocycles),
        dim_h1=len(cocycles) - len(coboundaries),
        cocycle_basis=tuple(cocycles),
        coboundaries=tuple(coboundaries),
    )
    name = g.label.name if g.label else "algebra"
    logger.info("H1 of %s: invariants=%d coboundaries=%d cocycles=%d h1=%d", name, *report.dims())
    return report


# -- The introduction table ---------------------------------------------------


DEFAULT_LAMBDA_VALUES: dict[str, tuple[str, ...]] = {
    "R3Lambda": ("1/2", "-1/2"),
    "R3PrimeLambda": ("1", "2"),
}

# (column, family, fixed lambda); None means "take the sampled values"
H1_COLUMNS: tuple[tuple[str, Family, str | None], ...] = (
    ("h3", Family.H3, None),
    ("r3", Family.R3, None),
    ("r3,lambda", Family.R3_LAMBDA, None),
    ("r3,-1", Family.R3_LAMBDA, "-1"),
    ("r3,1", Family.R3_LAMBDA, "1"),
    ("r'3,lambda", Family.R3_PRIME_LAMBDA, None),
    ("r'3,0", Family.R3_PRIME_LAMBDA, "0"),
    ("su2", Family.SU2, None),
    ("sl2", Family.SL2R, None),
)

# Published dimensions per column: (invariants, coboundaries, cocycles, h1)
PUBLISHED_H1: dict[str, tuple[int, int, int, int]] = {
    "h3": (2, 1, 6, 5),
    "r3": (0, 3, 4, 1),
    "r3,lambda": (0, 3, 4, 1),
    "r3,-1": (1, 2, 4, 2),
    "r3,1": (0, 3, 6, 3),
    "r'3,lambda": (0, 3, 4, 1),
    "r'3,0": (1, 2, 4, 2),
    "su2": (0, 3, 3, 0),
    "sl2": (0, 3, 3, 0),
}


@dataclass(frozen=True)
class H1Row:
    column: str
    label: CatalogLabel
    report: CohomologyReport

    @property
    def matches_published(self) -> bool:
        return self.report.dims() == PUBLISHED_H1[self.column]

    def to_dict(self) -> dict[str, Any]:
        return {
            "column": self.column,
            "label": self.label.to_dict(),
            "matches_published": self.matches_published,
            **self.report.to_dict(),
        }


def h1_table(lambda_values: dict[str, tuple[str, ...]] | None = None) -> list[H1Row]:
    """One row per table column, and one per sampled lambda in the lambda columns."""
    values = {**DEFAULT_LAMBDA_VALUES, **(lambda_values or {})}
    rows = []
    for column, family, fixed in H1_COLUMNS:
        if family in (Family.R3_LAMBDA, Family.R3_PRIME_LAMBDA):
            lams = [fixed] if fixed is not None else list(values[family.value])
        else:
            lams = [None]
        for lam in lams:
            label = CatalogLabel(family, rat(lam) if lam is not None else None)
            rows.append(H1Row(column, label, h1_report(catalog_build(label))))
    return rows

