"""Cobrackets and the Lie bialgebra axioms.

A cobracket on an n-dimensional algebra is stored as an N x n matrix
(N = n(n-1)/2) whose column j holds the wedge-basis coordinates of
delta(e_j). For dimension 3 on the basis (x, y, h) the entries are named

    [[a1, b1, c1],
     [a2, b2, c2],
     [a3, b3, c3]]

so delta(x) = a1 x^y + a2 y^h + a3 h^x and likewise for y and h.

This module checks the 1-cocycle and co-Jacobi conditions, builds the
characteristic derivation Delta = [-,-] o delta, produces coboundaries from
r-matrices (and back, for the simple algebras), evaluates the Schouten
self-bracket, and computes quotient bialgebras, coideals and kernels.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from sympy import ImmutableMatrix, Rational

from src.errors import (
    DocumentError,
    InvalidBialgebraError,
    LieBialgebraError,
    NotACoboundaryError,
    ShapeError,
    UnsupportedAlgebraError,
)
from src.exactnum import (
    ZERO,
    charpoly_coeffs,
    column,
    det,
    hstack,
    in_span,
    inverse,
    is_zero,
    mat,
    nullspace_basis,
    rank,
    rat,
    rat_str,
    solve_exact,
    to_rows,
    unit,
    vstack,
    zeros,
)
from src.liealg import (
    WEDGE_PAIRS,
    CatalogLabel,
    Family,
    LieAlgebra,
    check_jacobi,
    derivation_on_wedge,
    derived_subalgebra,
    wedge,
    wedge_action,
    wedge_action_matrix,
    wedge_dim,
)

logger = logging.getLogger(__name__)


# -- Value types -------------------------------------------------------------


@dataclass(frozen=True)
class Cobracket:
    """delta: g -> wedge^2 g as an N x n matrix; column j is delta(e_j)."""

    m: ImmutableMatrix

    def __post_init__(self) -> None:
        n = self.m.cols
        if n not in WEDGE_PAIRS or self.m.rows != wedge_dim(n):
            raise ShapeError(f"a cobracket on a {n}-dimensional algebra needs {wedge_dim(n) if n in WEDGE_PAIRS else '?'} rows, got {self.m.rows}")

    @property
    def dim(self) -> int:
        return self.m.cols

    @classmethod
    def from_rows(cls, rows: list[list[object]]) -> Cobracket:
        return cls(mat(rows))

    @classmethod
    def zero(cls, dim: int) -> Cobracket:
        return cls(zeros(wedge_dim(dim), dim))

    def image(self, j: int) -> ImmutableMatrix:
        """delta(e_j)."""
        return self.m[:, j]

    def apply(self, v: ImmutableMatrix) -> ImmutableMatrix:
        return self.m * v

    def is_zero(self) -> bool:
        return is_zero(self.m)

    def coefficients(self) -> dict[str, Rational]:
        """The nine named coefficients a1..c3 of a 3-dimensional cobracket."""
        if self.dim != 3:
            raise ShapeError("named coefficients exist only in dimension 3")
        return {
            f"{letter}{row + 1}": self.m[row, col]
            for col, letter in enumerate("abc")
            for row in range(3)
        }

    def to_rows(self) -> list[list[str]]:
        return to_rows(self.m)


@dataclass(frozen=True)
class RMatrix:
    """r = alpha e1^e2 + beta e2^e3 + gamma e3^e1 (dimension 3 only)."""

    alpha: Rational
    beta: Rational
    gamma: Rational

    @classmethod
    def of(cls, alpha: object, beta: object, gamma: object) -> RMatrix:
        return cls(rat(alpha), rat(beta), rat(gamma))

    def as_vector(self) -> ImmutableMatrix:
        return column((self.alpha, self.beta, self.gamma))

    def is_zero(self) -> bool:
        return self.alpha == 0 and self.beta == 0 and self.gamma == 0

    def to_dict(self) -> dict[str, str]:
        return {"alpha": rat_str(self.alpha), "beta": rat_str(self.beta), "gamma": rat_str(self.gamma)}


@dataclass(frozen=True)
class DerivationReport:
    """Characteristic derivation Delta = [-,-] o delta and its invariants."""

    D: ImmutableMatrix
    trace: Rational
    det: Rational
    charpoly: tuple[Rational, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "D": to_rows(self.D),
            "trace": rat_str(self.trace),
            "det": rat_str(self.det),
            "charpoly": [rat_str(c) for c in self.charpoly],
        }


# -- Axioms ------------------------------------------------------------------


def _check_shape(g: LieAlgebra, d: Cobracket) -> None:
    if d.dim != g.dim:
        raise ShapeError(f"cobracket of dimension {d.dim} on an algebra of dimension {g.dim}")


def cocycle_residual(g: LieAlgebra, d: Cobracket) -> dict[tuple[int, int], ImmutableMatrix]:
    """delta([e_i,e_j]) - [delta e_i, e_j] - [e_i, delta e_j] for every pair i < j."""
    _check_shape(g, d)
    n = g.dim
    actions = [wedge_action(g, unit(n, i)) for i in range(n)]
    residuals = {}
    for i in range(n):
        for j in range(i + 1, n):
            # [w, e_j] = -ad_{e_j}(w) on the wedge square
            res = d.m * g.bracket_basis(i, j) + actions[j] * d.image(i) - actions[i] * d.image(j)
            residuals[(i, j)] = ImmutableMatrix(res)
    return residuals


def is_cocycle(g: LieAlgebra, d: Cobracket) -> bool:
    return all(is_zero(r) for r in cocycle_residual(g, d).values())


def cojacobi_equations_3d(d: Cobracket) -> tuple[Rational, Rational, Rational]:
    """The three quadratic co-Jacobi polynomials in the coefficients a1..c3."""
    if d.dim != 3:
        raise ShapeError(f"co-Jacobi equations are written for dimension 3, got {d.dim}")
    k = d.coefficients()
    a1, a2, a3 = k["a1"], k["a2"], k["a3"]
    b1, b2, b3 = k["b1"], k["b2"], k["b3"]
    c1, c2, c3 = k["c1"], k["c2"], k["c3"]
    q1 = -a1 * b2 + a2 * (b1 - c3) + a3 * c2
    q2 = b1 * a3 - b2 * c3 + b3 * (-a1 + c2)
    q3 = c1 * (a3 - b2) + c2 * b1 - c3 * a1
    return q1, q2, q3


def dual_algebra(d: Cobracket, basis_names: tuple[str, ...] | None = None) -> LieAlgebra:
    """The bracket on g* transposed from delta: [e^p, e^q] = sum_j <e^p ^ e^q, delta e_j> e^j."""
    n = d.dim
    names = basis_names or tuple(f"e{i + 1}*" for i in range(n))
    brackets = {}
    for k, (p, q) in enumerate(WEDGE_PAIRS[n]):
        brackets[(p, q)] = [d.m[k, j] for j in range(n)]
    return LieAlgebra.from_brackets(names, brackets)


def dual_jacobi_residual(g: LieAlgebra, d: Cobracket) -> list[ImmutableMatrix]:
    """Jacobi residuals of the dual bracket; all zero iff co-Jacobi holds."""
    _check_shape(g, d)
    return check_jacobi(dual_algebra(d))


def satisfies_cojacobi(g: LieAlgebra, d: Cobracket) -> bool:
    return all(is_zero(r) for r in dual_jacobi_residual(g, d))


@dataclass(frozen=True)
class LieBialgebra:
    """A Lie algebra with a cobracket; both axioms are validated on construction."""

    g: LieAlgebra
    delta: Cobracket

    def __post_init__(self) -> None:
        _check_shape(self.g, self.delta)
        failing = [pair for pair, r in cocycle_residual(self.g, self.delta).items() if not is_zero(r)]
        if failing:
            raise InvalidBialgebraError("cocycle", f"nonzero residual on pairs {failing}")
        if not satisfies_cojacobi(self.g, self.delta):
            raise InvalidBialgebraError("co-Jacobi", "the dual bracket violates the Jacobi identity")

    @property
    def dim(self) -> int:
        return self.g.dim

    def to_dict(self) -> dict[str, Any]:
        return {"algebra": self.g.to_dict(), "cobracket": self.delta.to_rows()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LieBialgebra:
        g, d = parse_bialgebra_document(data)
        return cls(g, d)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> LieBialgebra:
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def parse_bialgebra_document(data: Any) -> tuple[LieAlgebra, Cobracket]:
    """Decode a bialgebra document without checking the axioms."""
    if not isinstance(data, dict):
        raise DocumentError("document", "expected an object")
    if "algebra" not in data:
        raise DocumentError("algebra", "missing")
    g = LieAlgebra.from_dict(data["algebra"])
    rows = data.get("cobracket")
    if rows is None:
        raise DocumentError("cobracket", "missing")
    n, big_n = g.dim, wedge_dim(g.dim)
    if not isinstance(rows, list) or len(rows) != big_n:
        raise DocumentError("cobracket", f"expected {big_n} rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"cobracket[{i}]", f"expected {n} entries")
    try:
        m = mat(rows)
    except ValueError as exc:
        raise DocumentError("cobracket", str(exc)) from exc
    return g, Cobracket(m)


# -- Characteristic derivation ---------------------------------------------


def char_derivation_matrix(g: LieAlgebra, d: Cobracket) -> ImmutableMatrix:
    """Delta = [-,-] o delta as an n x n matrix."""
    _check_shape(g, d)
    if g.dim < 2:
        return zeros(g.dim, g.dim)
    return ImmutableMatrix(g.bracket_columns * d.m)


def char_derivation(b: LieBialgebra) -> DerivationReport:
    D = char_derivation_matrix(b.g, b.delta)
    return DerivationReport(D=D, trace=Rational(D.trace()), det=det(D), charpoly=tuple(charpoly_coeffs(D)))


def is_derivation(g: LieAlgebra, D: ImmutableMatrix) -> bool:
    """D[e_i, e_j] == [D e_i, e_j] + [e_i, D e_j] for all pairs."""
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            ei, ej = unit(n, i), unit(n, j)
            lhs = D * g.bracket(ei, ej)
            rhs = g.bracket(D * ei, ej) + g.bracket(ei, D * ej)
            if lhs != rhs:
                return False
    return True


def is_coderivation(d: Cobracket, D: ImmutableMatrix) -> bool:
    """delta o D == (D ^ 1 + 1 ^ D) o delta, i.e. D^T is a derivation of g*."""
    return d.m * D == derivation_on_wedge(D) * d.m


# -- Coboundaries and r-matrices -------------------------------------------


_SIMPLE = (Family.SU2, Family.SL2R)


def _simple_family(g: LieAlgebra) -> Family:
    if g.label is None or g.label.family not in _SIMPLE:
        raise UnsupportedAlgebraError("needs su(2) or sl(2,R) in its catalog basis")
    return g.label.family


def coboundary_from_r(g: LieAlgebra, r: RMatrix) -> Cobracket:
    """delta(e_j) = ad_{e_j}(r)."""
    vec = r.as_vector()
    cols = [wedge_action_matrix(g, unit(3, j)) * vec for j in range(3)]
    return Cobracket(hstack(cols, 3))


def _coboundary_system(g: LieAlgebra) -> ImmutableMatrix:
    """9 x 3 matrix sending r to the stacked columns of ad(r)."""
    return vstack([wedge_action_matrix(g, unit(3, j)) for j in range(3)], 3)


def coboundary_preimage(g: LieAlgebra, d: Cobracket) -> RMatrix:
    """The unique r with coboundary_from_r(g, r) == d on su(2) or sl(2,R)."""
    _simple_family(g)
    _check_shape(g, d)
    rhs = vstack([d.image(j) for j in range(3)], 1)
    solution = solve_exact(_coboundary_system(g), rhs)
    if solution is None:
        raise NotACoboundaryError()
    return RMatrix(solution[0], solution[1], solution[2])


def _cyb_coefficient(g: LieAlgebra, r: RMatrix) -> Rational:
    """Coefficient on e1^e2^e3 of [r12,r13] + [r12,r23] + [r13,r23].

    r is expanded as the antisymmetric tensor R with r = sum_{i<j} R_ij e_i^e_j;
    the three-tensor is totally antisymmetric, so its (0,1,2) entry is the
    coefficient.
    """
    R = [[ZERO] * 3 for _ in range(3)]
    for value, (p, q) in zip((r.alpha, r.beta, r.gamma), WEDGE_PAIRS[3]):
        R[p][q] = value
        R[q][p] = -value
    c = g.c
    total = ZERO
    for i in range(3):
        for j in range(3):
            if R[i][j] == 0:
                continue
            for k in range(3):
                for l in range(3):
                    if R[k][l] == 0:
                        continue
                    w = R[i][j] * R[k][l]
                    # [r12, r13]: [e_i, e_k] (x) e_j (x) e_l
                    if j == 1 and l == 2:
                        total += w * c[0][i][k]
                    # [r12, r23]: e_i (x) [e_j, e_k] (x) e_l
                    if i == 0 and l == 2:
                        total += w * c[1][j][k]
                    # [r13, r23]: e_i (x) e_k (x) [e_j, e_l]
                    if i == 0 and k == 1:
                        total += w * c[2][j][l]
    return total


# su(2) closed form is printed on u^w^v, sl(2,R) on u^v^w
_SCHOUTEN_ORIENTATION = {Family.SU2: -1, Family.SL2R: 1}


def schouten_self_bracket(g: LieAlgebra, r: RMatrix) -> Rational:
    """Coefficient of [r, r] on e1^e2^e3 for su(2) and sl(2,R).

    Evaluates 2 * CYB(r) by explicit trilinear expansion and reports it in
    the orientation in which each closed form is stated: su(2) gives
    -2(alpha^2 + beta^2 + gamma^2), sl(2,R) gives 2(alpha^2 - beta^2 - gamma^2).
    """
    family = _simple_family(g)
    return _SCHOUTEN_ORIENTATION[family] * 2 * _cyb_coefficient(g, r)


# -- Subspaces ----------------------------------------------------------------


def _quotient_basis_indices(g: LieAlgebra, derived: list[ImmutableMatrix]) -> list[int]:
    chosen: list[int] = []
    span = list(derived)
    for i in range(g.dim):
        e = unit(g.dim, i)
        if not in_span(span, e):
            chosen.append(i)
            span.append(e)
    return chosen


def quotient_bialgebra(b: LieBialgebra) -> LieBialgebra:
    """The induced bialgebra on the abelian quotient g/[g,g].

    The quotient basis is the images of the original basis vectors whose
    pivots lie outside [g,g], in their original order.
    """
    g, d = b.g, b.delta
    derived = derived_subalgebra(g)
    chosen = _quotient_basis_indices(g, derived)
    q = len(chosen)
    frame = hstack([unit(g.dim, i) for i in chosen] + derived, g.dim)
    projection = inverse(frame)[:q, :]
    images = [projection * unit(g.dim, i) for i in range(g.dim)]
    wedge_push = hstack(
        [wedge(images[p], images[s]) for p, s in WEDGE_PAIRS[g.dim]], wedge_dim(q)
    )
    pushed = hstack([wedge_push * d.image(i) for i in chosen], wedge_dim(q))
    names = tuple(g.basis_names[i] for i in chosen)
    label = CatalogLabel(Family.ABELIAN2) if q == 2 else CatalogLabel(Family.ABELIAN3) if q == 3 else None
    quotient = LieAlgebra.from_brackets(names, {}, label=label)
    logger.debug("quotient of dimension %d on basis %s", q, names)
    return LieBialgebra(quotient, Cobracket(ImmutableMatrix(pushed)))


def is_coideal(b: LieBialgebra, v: list[ImmutableMatrix]) -> bool:
    """True iff delta(V) lies in V ^ g."""
    n = b.dim
    span = [wedge(x, unit(n, j)) for x in v for j in range(n)]
    return all(in_span(span, b.delta.apply(x)) for x in v)


def kernel_subalgebra(b: LieBialgebra) -> list[ImmutableMatrix]:
    """Basis of ker delta, verified to be closed under the bracket."""
    kernel = nullspace_basis(b.delta.m)
    for i, x in enumerate(kernel):
        for y in kernel[i + 1:]:
            if not in_span(kernel, b.g.bracket(x, y)):
                raise LieBialgebraError("kernel of the cobracket is not a subalgebra; the input is not a bialgebra")
    return kernel


def center_image_is_invariant(b: LieBialgebra, center_basis: list[ImmutableMatrix], invariants: list[ImmutableMatrix]) -> bool:
    """delta(Z(g)) lies inside the invariant bivectors."""
    return all(in_span(invariants, b.delta.apply(z)) for z in center_basis)


def kernel_rank(b: LieBialgebra) -> int:
    return b.dim - rank(b.delta.m)
