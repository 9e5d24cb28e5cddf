"""Lie algebras of dimension at most 3 given by exact structure constants.

Holds the LieAlgebra value type, the catalog of real Lie algebras of
dimension 2 and 3 (in the basis order used throughout the package), and
the structural invariants the rest of the package needs: Jacobi residuals,
adjoint and wedge-square adjoint actions, center, derived subalgebra,
invariant bivectors and the Killing form.

Conventions:
    [e_i, e_j] = sum_k c[k][i][j] e_k
    wedge basis: dim 3 -> (e1^e2, e2^e3, e3^e1), dim 2 -> (e1^e2)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Sequence

from sympy import ImmutableMatrix, Rational

from src.errors import DocumentError, ParameterRangeError, ShapeError
from src.exactnum import (
    ZERO,
    column,
    column_space_basis,
    hstack,
    is_zero,
    nullspace_basis,
    rat,
    rat_str,
    unit,
    vstack,
    zeros,
)


# -- Wedge convention -------------------------------------------------------

WEDGE_PAIRS: dict[int, tuple[tuple[int, int], ...]] = {
    0: (),
    1: (),
    2: ((0, 1),),
    3: ((0, 1), (1, 2), (2, 0)),
}


def wedge_dim(n: int) -> int:
    return len(WEDGE_PAIRS[n])


def wedge(u: ImmutableMatrix, v: ImmutableMatrix) -> ImmutableMatrix:
    """Coordinates of u ^ v in the wedge basis."""
    pairs = WEDGE_PAIRS[u.rows]
    return column(u[p] * v[q] - u[q] * v[p] for p, q in pairs)


def wedge_index(i: int, j: int, n: int) -> tuple[int, int]:
    """(k, s) with e_i ^ e_j = s * W_k; s = 0 when i == j."""
    if i == j:
        return 0, 0
    for k, (p, q) in enumerate(WEDGE_PAIRS[n]):
        if (p, q) == (i, j):
            return k, 1
        if (p, q) == (j, i):
            return k, -1
    raise ShapeError(f"no wedge pair ({i}, {j}) in dimension {n}")


# -- Catalog labels ----------------------------------------------------------


class Family(Enum):
    """Isomorphism types of real Lie algebras of dimension 2 and 3."""

    ABELIAN2 = "Abelian2"
    AFF2 = "Aff2"
    ABELIAN3 = "Abelian3"
    H3 = "H3"
    R3 = "R3"
    R3_LAMBDA = "R3Lambda"
    R3_PRIME_LAMBDA = "R3PrimeLambda"
    SU2 = "Su2"
    SL2R = "Sl2R"


_LAMBDA_FAMILIES = (Family.R3_LAMBDA, Family.R3_PRIME_LAMBDA)
_TWO_DIMENSIONAL = (Family.ABELIAN2, Family.AFF2)


@dataclass(frozen=True)
class CatalogLabel:
    """A catalog family plus its parameter (only r_{3,lambda} and r'_{3,lambda})."""

    family: Family
    lam: Rational | None = None

    def __post_init__(self) -> None:
        if self.family in _LAMBDA_FAMILIES:
            if self.lam is None:
                raise ParameterRangeError(f"{self.family.value} needs lambda")
            object.__setattr__(self, "lam", rat(self.lam))
            if self.family is Family.R3_LAMBDA and not (-1 <= self.lam <= 1):
                raise ParameterRangeError(f"R3Lambda needs -1 <= lambda <= 1, got {rat_str(self.lam)}")
            if self.family is Family.R3_PRIME_LAMBDA and self.lam < 0:
                raise ParameterRangeError(f"R3PrimeLambda needs lambda >= 0, got {rat_str(self.lam)}")
        elif self.lam is not None:
            raise ParameterRangeError(f"{self.family.value} takes no lambda")

    @property
    def dim(self) -> int:
        return 2 if self.family in _TWO_DIMENSIONAL else 3

    @property
    def name(self) -> str:
        if self.lam is None:
            return self.family.value
        return f"{self.family.value}(lambda={rat_str(self.lam)})"

    @classmethod
    def parse(cls, text: str) -> CatalogLabel:
        """Parse the CLI form ``NAME[,lambda=p/q]`` (family names are case-insensitive)."""
        head, _, tail = text.strip().partition(",")
        by_name = {f.value.lower(): f for f in Family}
        family = by_name.get(head.strip().lower())
        if family is None:
            raise ParameterRangeError(f"unknown family {head.strip()!r}")
        lam = None
        if tail:
            key, _, value = tail.partition("=")
            if key.strip().lower() not in ("lambda", "lam"):
                raise ParameterRangeError(f"unknown label parameter {key.strip()!r}")
            lam = rat(value)
        return cls(family=family, lam=lam)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"family": self.family.value}
        if self.lam is not None:
            d["lambda"] = rat_str(self.lam)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> CatalogLabel:
        try:
            family = Family(d["family"])
        except (KeyError, ValueError) as exc:
            raise DocumentError("label.family", f"unknown family {d.get('family')!r}") from exc
        lam = d.get("lambda")
        try:
            return cls(family=family, lam=rat(lam) if lam is not None else None)
        except ValueError as exc:
            raise DocumentError("label.lambda", str(exc)) from exc


# -- Lie algebras ----------------------------------------------------------


Tensor = tuple[tuple[tuple[Rational, ...], ...], ...]


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants c[k][i][j] with [e_i, e_j] = sum_k c[k][i][j] e_k.

    Antisymmetry is enforced on construction; the Jacobi identity is not
    (use check_jacobi), so broken tensors can be represented and diagnosed.
    """

    c: Tensor
    basis_names: tuple[str, ...]
    label: CatalogLabel | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = len(self.basis_names)
        if n > 3:
            raise ShapeError(f"dimension {n} is not supported")
        if len(self.c) != n or any(len(ck) != n or any(len(row) != n for row in ck) for ck in self.c):
            raise ShapeError(f"structure constants do not match {n} basis names")
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    if self.c[k][i][j] != -self.c[k][j][i]:
                        raise ShapeError(f"structure constants not antisymmetric at ({k},{i},{j})")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @classmethod
    def from_brackets(
        cls,
        basis_names: Sequence[str],
        brackets: dict[tuple[int, int], Sequence[object]],
        label: CatalogLabel | None = None,
    ) -> LieAlgebra:
        """Build from {(i, j): coefficients of [e_i, e_j]}; missing pairs are zero."""
        n = len(basis_names)
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), coeffs in brackets.items():
            if len(coeffs) != n:
                raise ShapeError(f"bracket [{i},{j}] has {len(coeffs)} coefficients, expected {n}")
            for k, value in enumerate(coeffs):
                value = rat(value)
                c[k][i][j] = value
                c[k][j][i] = -value
        frozen = tuple(tuple(tuple(row) for row in ck) for ck in c)
        return cls(c=frozen, basis_names=tuple(basis_names), label=label)

    @cached_property
    def ad_basis(self) -> tuple[ImmutableMatrix, ...]:
        """ad(e_i) for every basis vector."""
        n = self.dim
        return tuple(
            ImmutableMatrix(n, n, lambda k, j, i=i: self.c[k][i][j]) for i in range(n)
        )

    @cached_property
    def bracket_columns(self) -> ImmutableMatrix:
        """n x N matrix whose k-th column is [e_p, e_q] for the wedge pair W_k."""
        n = self.dim
        cols = [self.bracket_basis(p, q) for p, q in WEDGE_PAIRS[n]]
        return hstack(cols, n)

    def bracket_basis(self, i: int, j: int) -> ImmutableMatrix:
        return column(self.c[k][i][j] for k in range(self.dim))

    def bracket(self, u: ImmutableMatrix, v: ImmutableMatrix) -> ImmutableMatrix:
        result = zeros(self.dim, 1)
        for i in range(self.dim):
            if u[i] != 0:
                result += u[i] * (self.ad_basis[i] * v)
        return ImmutableMatrix(result)

    def is_abelian(self) -> bool:
        return all(is_zero(a) for a in self.ad_basis)

    def with_label(self, label: CatalogLabel | None) -> LieAlgebra:
        return LieAlgebra(c=self.c, basis_names=self.basis_names, label=label)

    def to_dict(self) -> dict[str, Any]:
        brackets = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                coeffs = [self.c[k][i][j] for k in range(self.dim)]
                if any(v != 0 for v in coeffs):
                    brackets.append({"i": i, "j": j, "coeffs": [rat_str(v) for v in coeffs]})
        d: dict[str, Any] = {
            "dim": self.dim,
            "basis": list(self.basis_names),
            "brackets": brackets,
        }
        if self.label is not None:
            d["label"] = self.label.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any], prefix: str = "algebra") -> LieAlgebra:
        if not isinstance(d, dict):
            raise DocumentError(prefix, "expected an object")
        dim = d.get("dim")
        if dim not in (2, 3):
            raise DocumentError(f"{prefix}.dim", f"expected 2 or 3, got {dim!r}")
        basis = d.get("basis", [f"e{i + 1}" for i in range(dim)])
        if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
            raise DocumentError(f"{prefix}.basis", f"expected {dim} names")
        brackets: dict[tuple[int, int], list[Rational]] = {}
        entries = d.get("brackets", [])
        if not isinstance(entries, list):
            raise DocumentError(f"{prefix}.brackets", "expected a list")
        for idx, entry in enumerate(entries):
            where = f"{prefix}.brackets[{idx}]"
            if not isinstance(entry, dict):
                raise DocumentError(where, "expected an object")
            i, j = entry.get("i"), entry.get("j")
            if not isinstance(i, int) or not isinstance(j, int) or not (0 <= i < dim and 0 <= j < dim) or i == j:
                raise DocumentError(where, f"invalid index pair ({i!r}, {j!r})")
            coeffs = entry.get("coeffs")
            if not isinstance(coeffs, list) or len(coeffs) != dim:
                raise DocumentError(f"{where}.coeffs", f"expected {dim} coefficients")
            try:
                values = [rat(v) for v in coeffs]
            except ValueError as exc:
                raise DocumentError(f"{where}.coeffs", str(exc)) from exc
            if i > j:
                i, j = j, i
                values = [-v for v in values]
            brackets[(i, j)] = values
        label = None
        if d.get("label") is not None:
            label = CatalogLabel.from_dict(d["label"])
            if label.dim != dim:
                raise DocumentError(f"{prefix}.label", f"{label.name} has dimension {label.dim}")
        return cls.from_brackets(basis, brackets, label=label)


# -- Catalog ---------------------------------------------------------------


_SOLVABLE_BASIS = ("x", "y", "h")
_SIMPLE_BASIS = ("u", "v", "w")
_PLANE_BASIS = ("h", "x")


def catalog_build(label: CatalogLabel) -> LieAlgebra:
    """The catalog algebra for ``label`` in its canonical basis.

    Solvable algebras use the basis (x, y, h), su(2) and sl(2,R) use
    (u, v, w), and the plane algebras use (h, x).
    """
    fam = label.family
    x, y, h = 0, 1, 2
    if fam is Family.ABELIAN2:
        return LieAlgebra.from_brackets(_PLANE_BASIS, {}, label=label)
    if fam is Family.AFF2:
        return LieAlgebra.from_brackets(_PLANE_BASIS, {(0, 1): [0, 1]}, label=label)
    if fam is Family.ABELIAN3:
        return LieAlgebra.from_brackets(("e1", "e2", "e3"), {}, label=label)
    if fam is Family.H3:
        brackets = {(x, y): [0, 0, 1]}
    elif fam is Family.R3:
        brackets = {(h, x): [1, 0, 0], (h, y): [1, 1, 0]}
    elif fam is Family.R3_LAMBDA:
        brackets = {(h, x): [1, 0, 0], (h, y): [0, label.lam, 0]}
    elif fam is Family.R3_PRIME_LAMBDA:
        lam = label.lam
        brackets = {(h, x): [lam, -1, 0], (h, y): [1, lam, 0]}
    elif fam is Family.SU2:
        u, v, w = 0, 1, 2
        return LieAlgebra.from_brackets(
            _SIMPLE_BASIS, {(u, v): [0, 0, 1], (v, w): [1, 0, 0], (w, u): [0, 1, 0]}, label=label
        )
    else:
        u, v, w = 0, 1, 2
        return LieAlgebra.from_brackets(
            _SIMPLE_BASIS, {(u, v): [0, 0, 1], (v, w): [-1, 0, 0], (w, u): [0, -1, 0]}, label=label
        )
    return LieAlgebra.from_brackets(_SOLVABLE_BASIS, brackets, label=label)


def in_canonical_basis(g: LieAlgebra, label: CatalogLabel) -> bool:
    """True iff g has exactly the catalog structure constants of ``label``."""
    return g.dim == label.dim and g.c == catalog_build(label).c


# -- Structural invariants --------------------------------------------------


def check_jacobi(g: LieAlgebra) -> list[ImmutableMatrix]:
    """Cyclic sums [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], i < j < k."""
    n = g.dim
    residuals = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = unit(n, i), unit(n, j), unit(n, k)
                total = (
                    g.bracket(g.bracket(ei, ej), ek)
                    + g.bracket(g.bracket(ej, ek), ei)
                    + g.bracket(g.bracket(ek, ei), ej)
                )
                residuals.append(ImmutableMatrix(total))
    return residuals


def is_lie_algebra(g: LieAlgebra) -> bool:
    return all(is_zero(r) for r in check_jacobi(g))


def ad_matrix(g: LieAlgebra, z: ImmutableMatrix) -> ImmutableMatrix:
    """Matrix of ad_z = [z, -]."""
    if z.rows != g.dim:
        raise ShapeError(f"vector of length {z.rows} for a {g.dim}-dimensional algebra")
    result = zeros(g.dim, g.dim)
    for i in range(g.dim):
        if z[i] != 0:
            result += z[i] * g.ad_basis[i]
    return ImmutableMatrix(result)


def derivation_on_wedge(d: ImmutableMatrix) -> ImmutableMatrix:
    """Matrix of a ^ b -> Da ^ b + a ^ Db on the wedge basis."""
    n = d.rows
    cols = []
    for p, q in WEDGE_PAIRS[n]:
        cols.append(wedge(d[:, p], unit(n, q)) + wedge(unit(n, p), d[:, q]))
    return hstack(cols, wedge_dim(n))


def wedge_action(g: LieAlgebra, z: ImmutableMatrix) -> ImmutableMatrix:
    """ad_z extended to the wedge square by the Leibniz rule, any dimension."""
    return derivation_on_wedge(ad_matrix(g, z))


def wedge_action_matrix(g: LieAlgebra, z: ImmutableMatrix) -> ImmutableMatrix:
    """3x3 matrix of ad_z on the wedge square in the (e1^e2, e2^e3, e3^e1) basis."""
    if g.dim != 3:
        raise ShapeError(f"wedge action matrix needs dimension 3, got {g.dim}")
    return wedge_action(g, z)


def center(g: LieAlgebra) -> list[ImmutableMatrix]:
    """Basis of {z : [z, e_i] = 0 for all i}."""
    return nullspace_basis(vstack(list(g.ad_basis), g.dim))


def derived_subalgebra(g: LieAlgebra) -> list[ImmutableMatrix]:
    """Basis of span{[e_i, e_j]} (pivot columns, deterministic)."""
    n = g.dim
    brackets = [g.bracket_basis(i, j) for i in range(n) for j in range(i + 1, n)]
    return column_space_basis(brackets, n)


def lower_central_series(g: LieAlgebra) -> list[list[ImmutableMatrix]]:
    """g, [g,g], [g,[g,g]], ... until the dimension stops dropping."""
    n = g.dim
    series = [[unit(n, i) for i in range(n)]]
    while True:
        current = series[-1]
        nxt = column_space_basis(
            [g.bracket(unit(n, i), v) for i in range(n) for v in current], n
        )
        if len(nxt) == len(current):
            return series
        series.append(nxt)
        if not nxt:
            return series


def is_nilpotent(g: LieAlgebra) -> bool:
    return not lower_central_series(g)[-1]


def invariant_wedge_subspace(g: LieAlgebra) -> list[ImmutableMatrix]:
    """Basis of the ad-invariant bivectors: joint kernel of the wedge actions."""
    n = g.dim
    blocks = [wedge_action(g, unit(n, i)) for i in range(n)]
    return nullspace_basis(vstack(blocks, wedge_dim(n)))


def killing_form(g: LieAlgebra) -> ImmutableMatrix:
    """K_ij = trace(ad_{e_i} ad_{e_j})."""
    ads = g.ad_basis
    n = g.dim
    return ImmutableMatrix(n, n, lambda i, j: (ads[i] * ads[j]).trace())


def basis_vectors(g: LieAlgebra) -> list[ImmutableMatrix]:
    return [unit(g.dim, i) for i in range(g.dim)]
