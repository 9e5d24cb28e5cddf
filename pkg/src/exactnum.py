"""Exact rational scalars and small dense exact linear algebra.

Scalars are sympy ``Rational`` values and matrices are sympy
``ImmutableMatrix`` values with rational entries. Nothing in this module
touches floating point: kernels, ranks and signatures are computed over
the rationals, so residual checks downstream can use plain equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import ImmutableMatrix, Integer, Rational, sqrt

from src.errors import NotSymmetricError, ShapeError, SingularMatrixError

Rat = Rational
Mat = ImmutableMatrix

ZERO = Rational(0)
ONE = Rational(1)


# -- Scalars ---------------------------------------------------------------


def rat(value: object) -> Rational:
    """Convert an int, Fraction, Rational or "p/q" string to a Rational.

    Floats are rejected: every coefficient must be exact.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not an exact rational: {value!r}")
    if isinstance(value, (int, Integer)):
        return Rational(int(value))
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        try:
            result = Rational(text)
        except (TypeError, ValueError, SyntaxError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
        if not isinstance(result, Rational):
            raise ValueError(f"not an exact rational: {value!r}")
        return result
    raise ValueError(f"not an exact rational: {value!r}")


def rat_str(value: Rational) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    value = rat(value)
    if value.q == 1:
        return str(value.p)
    return f"{value.p}/{value.q}"


def sign(value: Rational) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def rational_sqrt(value: Rational) -> Rational | None:
    """Return the non-negative rational square root, or None if irrational."""
    value = rat(value)
    if value < 0:
        return None
    root = sqrt(value)
    if root.is_Rational:
        return Rational(root)
    return None


@dataclass(frozen=True)
class SamplingBounds:
    """Ranges for pseudo-random rational draws: p/q with |p| <= N, 1 <= q <= D."""

    numerator_bound: int = 9
    denominator_bound: int = 6


def random_rational(
    rng: random.Random,
    bounds: SamplingBounds | None = None,
    nonzero: bool = False,
    positive: bool = False,
) -> Rational:
    """Draw p/q uniformly from the box given by ``bounds``."""
    bounds = bounds or SamplingBounds()
    low = 1 if positive else -bounds.numerator_bound
    while True:
        p = rng.randint(low, bounds.numerator_bound)
        if p == 0 and (nonzero or positive):
            continue
        q = rng.randint(1, bounds.denominator_bound)
        return Rational(p, q)


# -- Matrices --------------------------------------------------------------


def mat(rows: Sequence[Sequence[object]]) -> ImmutableMatrix:
    """Build a matrix from rows of exact scalars (ints, Rationals, "p/q")."""
    rows = [list(r) for r in rows]
    if not rows:
        return ImmutableMatrix.zeros(0, 0)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ShapeError("rows have different lengths")
    return ImmutableMatrix([[rat(e) for e in r] for r in rows])


def column(entries: Iterable[object]) -> ImmutableMatrix:
    values = [rat(e) for e in entries]
    return ImmutableMatrix(len(values), 1, values)


def zeros(rows: int, cols: int) -> ImmutableMatrix:
    return ImmutableMatrix.zeros(rows, cols)


def identity(n: int) -> ImmutableMatrix:
    return ImmutableMatrix.eye(n)


def unit(n: int, i: int) -> ImmutableMatrix:
    """The i-th standard basis column of length n."""
    return ImmutableMatrix(n, 1, [ONE if k == i else ZERO for k in range(n)])


def to_rows(m: ImmutableMatrix) -> list[list[str]]:
    """Rows of Rat strings, the on-disk form of a matrix."""
    return [[rat_str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def is_zero(m: ImmutableMatrix) -> bool:
    return all(e == 0 for e in m)


def hstack(columns: Sequence[ImmutableMatrix], rows: int) -> ImmutableMatrix:
    """Side-by-side concatenation; ``rows`` fixes the shape of an empty stack."""
    if not columns:
        return ImmutableMatrix.zeros(rows, 0)
    return ImmutableMatrix.hstack(*columns)


def vstack(blocks: Sequence[ImmutableMatrix], cols: int) -> ImmutableMatrix:
    if not blocks:
        return ImmutableMatrix.zeros(0, cols)
    return ImmutableMatrix.vstack(*blocks)


def nullspace_basis(m: ImmutableMatrix) -> list[ImmutableMatrix]:
    """Basis of {v : m v = 0} in reduced echelon parameterization.

    One vector per free column, in increasing column order, with that free
    variable set to 1.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [unit(m.cols, i) for i in range(m.cols)]
    return [ImmutableMatrix(v) for v in m.nullspace()]


def rank(m: ImmutableMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(m.rank())


def pivot_indices(vectors: Sequence[ImmutableMatrix], rows: int) -> list[int]:
    """Indices of the first independent vectors, in order."""
    stacked = hstack(list(vectors), rows)
    if stacked.cols == 0 or is_zero(stacked):
        return []
    _, pivots = stacked.rref()
    return list(pivots)


def column_space_basis(vectors: Sequence[ImmutableMatrix], rows: int) -> list[ImmutableMatrix]:
    """Independent subset of ``vectors`` spanning the same space (pivot columns)."""
    return [ImmutableMatrix(vectors[j]) for j in pivot_indices(vectors, rows)]


def in_span(basis: Sequence[ImmutableMatrix], v: ImmutableMatrix) -> bool:
    if is_zero(v):
        return True
    if not basis:
        return False
    base = hstack(list(basis), v.rows)
    return rank(base) == rank(base.row_join(v))


def det(m: ImmutableMatrix) -> Rational:
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return ONE
    return Rational(m.det())


def inverse(m: ImmutableMatrix) -> ImmutableMatrix:
    if det(m) == 0:
        raise SingularMatrixError("matrix is singular")
    return ImmutableMatrix(m.inv())


def solve_exact(a: ImmutableMatrix, b: ImmutableMatrix) -> ImmutableMatrix | None:
    """A particular solution of a x = b (free variables set to 0), or None."""
    try:
        solution, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.rows:
        solution = solution.xreplace({t: 0 for t in params})
    return ImmutableMatrix(solution)


def charpoly_coeffs(m: ImmutableMatrix) -> list[Rational]:
    """Coefficients of det(t I - m), leading coefficient first."""
    if m.rows == 0:
        return [ONE]
    return [Rational(c) for c in m.charpoly().all_coeffs()]


def _sign_changes(coeffs: Sequence[Rational]) -> int:
    signs = [sign(c) for c in coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sym_signature(s: ImmutableMatrix) -> tuple[int, int]:
    """Sylvester signature (p, q) of a symmetric rational matrix.

    The characteristic polynomial of a symmetric matrix has only real roots,
    so Descartes' rule of signs counts positive and negative roots exactly.
    """
    if s.rows != s.cols or s != s.T:
        raise NotSymmetricError()
    coeffs = charpoly_coeffs(s)
    n = len(coeffs) - 1
    positive = _sign_changes(coeffs)
    mirrored = [c * (-1) ** (n - i) for i, c in enumerate(coeffs)]
    negative = _sign_changes(mirrored)
    return positive, negative
