"""Classification on the solvable catalog algebras h3, r3, r3,lambda and r'3,lambda.

Each classifier reads exact invariants off the cobracket coefficients
(a1..c3 in the basis x, y, h) to pick the class, and in the same pass runs
the reduction chain that carries the cobracket to the printed
representative. Steps are accumulated right to left, so the returned
witness phi satisfies pullback(phi, delta) == representative. A chain that
would need an irrational square root stops and returns no witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from sympy import ImmutableMatrix, Rational

from src.autact import phi0, psi, pullback_matrix
from src.classify.tags import OUTSIDE_PUBLISHED_LIST, ClassTag
from src.errors import UnsupportedAlgebraError
from src.exactnum import (
    column,
    det,
    hstack,
    identity,
    mat,
    rational_sqrt,
    sign,
    solve_exact,
    sym_signature,
)
from src.liealg import CatalogLabel, Family

logger = logging.getLogger(__name__)

Outcome = tuple[ClassTag, ImmutableMatrix | None]
Shift = Callable[[Rational, Rational], ImmutableMatrix]


# -- Reduction bookkeeping ----------------------------------------------------


def _coef(m: ImmutableMatrix, name: str) -> Rational:
    return m[int(name[1]) - 1, "abc".index(name[0])]


@dataclass
class _Reduction:
    """The current cobracket and the product of the steps applied so far."""

    m: ImmutableMatrix
    phi: ImmutableMatrix

    @classmethod
    def start(cls, m: ImmutableMatrix) -> _Reduction:
        return cls(m, identity(m.cols))

    def k(self, name: str) -> Rational:
        return _coef(self.m, name)

    def apply(self, step: ImmutableMatrix) -> None:
        self.m = pullback_matrix(step, self.m)
        self.phi = ImmutableMatrix(self.phi * step)


def _diag(*entries: object) -> ImmutableMatrix:
    n = len(entries)
    return mat([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def _shift(a: Rational, b: Rational) -> ImmutableMatrix:
    """h -> h + a x + b y."""
    return mat([[1, 0, a], [0, 1, b], [0, 0, 1]])


def _h3_shift(a: Rational, b: Rational) -> ImmutableMatrix:
    """x -> x + a h, y -> y + b h."""
    return mat([[1, 0, 0], [0, 1, 0], [a, b, 1]])


def _block(p: ImmutableMatrix, corner: object = 1) -> ImmutableMatrix:
    return mat([[p[0, 0], p[0, 1], 0], [p[1, 0], p[1, 1], 0], [0, 0, corner]])


def _zero_by_translation(
    red: _Reduction,
    names: tuple[str, ...],
    shift: Shift = _shift,
    free: tuple[str, ...] = ("a", "b"),
) -> bool:
    """Apply the translation that kills ``names``.

    The named coefficients must depend affinely on the free translation
    parameters; the linear part is read off from unit translations.
    """
    base = [red.k(n) for n in names]
    unit_steps = {"a": shift(1, 0), "b": shift(0, 1)}
    cols = []
    for direction in free:
        moved = pullback_matrix(unit_steps[direction], red.m)
        cols.append(column(_coef(moved, n) - v for n, v in zip(names, base)))
    solution = solve_exact(hstack(cols, len(names)), column(-v for v in base))
    if solution is None:
        return False
    values = dict(zip(free, solution))
    red.apply(shift(values.get("a", 0), values.get("b", 0)))
    return True


def _normalize(red: _Reduction, value: Rational, scale: Callable[[Rational], ImmutableMatrix]) -> ImmutableMatrix | None:
    """Divide ``value`` by root^2 so it becomes its sign; None if the root is irrational."""
    if value == 0:
        return red.phi
    root = rational_sqrt(abs(value))
    if root is None:
        return None
    red.apply(scale(root))
    return red.phi


def _congruence_diagonalizer(s: ImmutableMatrix) -> ImmutableMatrix:
    """Q with Q^T s Q diagonal for a symmetric 2x2 matrix s."""
    p, q, r = s[0, 0], s[0, 1], s[1, 1]
    if p != 0:
        return mat([[1, -q / p], [0, 1]])
    if r != 0:
        return mat([[1, 0], [-q / r, 1]])
    if q != 0:
        return mat([[1, 1], [1, -1]])
    return identity(2)


# -- h3 ------------------------------------------------------------------------


# signature of the symmetric block -> printed (a2, b3)
H3_SIGNATURE_CLASSES: dict[tuple[int, int], tuple[int, int]] = {
    (2, 0): (1, 1),
    (0, 2): (-1, -1),
    (1, 1): (1, -1),
    (1, 0): (1, 0),
    (0, 1): (-1, 0),
}


def _h3_block_witness(s: ImmutableMatrix) -> ImmutableMatrix | None:
    q = _congruence_diagonalizer(s)
    d = q.T * s * q
    d1, d2 = d[0, 0], d[1, 1]
    if d1 == 0 or (d1 < 0 < d2):
        q = q.extract([0, 1], [1, 0])
        d1, d2 = d2, d1
    dq2 = det(q) ** 2
    s2 = rational_sqrt(abs(d1) / dq2)
    s1 = rational_sqrt(abs(d2) / dq2) if d2 != 0 else 1
    if s1 is None or s2 is None:
        return None
    p = q * _diag(s1, s2)
    return _block(p, det(p))


def _classify_h3(label: CatalogLabel, red: _Reduction) -> Outcome:
    a1, b1 = red.k("a1"), red.k("b1")
    if a1 != 0 or b1 != 0:
        # the quotient cobracket is nonzero; move it to (0, 1)
        p = mat([[b1, 0], [-a1, 1]]) if b1 != 0 else mat([[0, 1], [-a1, 0]])
        red.apply(_block(p, det(p)))
        _zero_by_translation(red, ("a3",), _h3_shift, ("a",))
        return ClassTag.make(label, "H3-I", {"b3": red.k("b3")}), red.phi

    a2, b2, a3, b3 = red.k("a2"), red.k("b2"), red.k("a3"), red.k("b3")
    s = mat([[a2, (b2 + a3) / 2], [(b2 + a3) / 2, b3]])
    twist = (b2 - a3) / 2
    pos, neg = sym_signature(s)
    if twist != 0:
        tag = ClassTag.make(
            label,
            "H3-II",
            {"sig_pos": pos, "sig_neg": neg, "det_ratio": det(s) / twist**2},
            flags=[OUTSIDE_PUBLISHED_LIST],
        )
        logger.warning("h3 cobracket with b2 != a3 matches no printed class: %s", tag.render())
        return tag, None
    a2r, b3r = H3_SIGNATURE_CLASSES[(pos, neg)]
    return ClassTag.make(label, "H3-II", {"a2": a2r, "b3": b3r}), _h3_block_witness(s)


# -- r3 ------------------------------------------------------------------------


def _scalar_xy(root: Rational) -> ImmutableMatrix:
    return _diag(root, root, 1)


def _classify_r3(label: CatalogLabel, red: _Reduction) -> Outcome:
    b1, b3, c1 = red.k("b1"), red.k("b3"), red.k("c1")
    if b3 != 0:
        _zero_by_translation(red, ("b1",), free=("b",))
        reduced = red.k("c1")
        tag = ClassTag.make(label, "R3-A", {"b3": b3, "c1_sign": sign(reduced)})
        return tag, _normalize(red, reduced, _scalar_xy)
    if b1 != 0:
        _zero_by_translation(red, ("c1",), free=("b",))
        red.apply(_diag(b1, b1, 1))
        return ClassTag.make(label, "R3-B"), red.phi
    return ClassTag.make(label, "R3-C", {"c1_sign": sign(c1)}), _normalize(red, c1, _scalar_xy)


# -- r3,lambda, lambda != +-1 ---------------------------------------------------


def _classify_r3_lambda(label: CatalogLabel, red: _Reduction) -> Outcome:
    a1, a3, c1, c3 = red.k("a1"), red.k("a3"), red.k("c1"), red.k("c3")
    if a3 != 0:
        _zero_by_translation(red, ("a1", "c3"))
        return ClassTag.make(label, "R3L-A", {"a3": a3}), red.phi
    if a1 != 0:
        _zero_by_translation(red, ("c1",), free=("a",))
        red.apply(_diag(1, a1, 1))
        return ClassTag.make(label, "R3L-B1"), red.phi
    if c3 != 0:
        _zero_by_translation(red, ("c1",), free=("b",))
        red.apply(_diag(c3, 1, 1))
        return ClassTag.make(label, "R3L-B2"), red.phi
    red.apply(_diag(c1, 1, 1))
    return ClassTag.make(label, "R3L-B0"), red.phi


# -- r3,-1 ------------------------------------------------------------------------


def _classify_r3_minus_one(label: CatalogLabel, red: _Reduction) -> Outcome:
    a1, b1, c1, a3 = red.k("a1"), red.k("b1"), red.k("c1"), red.k("a3")
    if a3 != 0:
        if a3 < 0:
            red.apply(phi0())
        _zero_by_translation(red, ("a1", "b1"))
        return ClassTag.make(label, "R3M1-A", {"a3": abs(a3)}), red.phi
    if a1 == 0 and b1 == 0:
        red.apply(_diag(c1, 1, 1))
        return ClassTag.make(label, "R3M1-B0"), red.phi
    if a1 == 0 or b1 == 0:
        if a1 == 0:
            red.apply(phi0())
        a1, c1 = red.k("a1"), red.k("c1")
        red.apply(_diag(c1 / a1 if c1 != 0 else 1, a1, 1))
        return ClassTag.make(label, "R3M1-B1", {"c1": 0 if c1 == 0 else 1}), red.phi
    ratio = c1 / (a1 * b1)
    red.apply(_diag(b1, a1, 1))
    return ClassTag.make(label, "R3M1-B2", {"ratio": ratio}), red.phi


# -- r3,1 -------------------------------------------------------------------------
#
# delta is encoded by the symmetric block B = [[a2, a3], [a3, b3]], the
# quotient vector f = (a1, b1) and c1. A linear automorphism P of span(x, y)
# acts by B -> P^T B P / det P, f -> P^T f / det P, c1 -> c1 / det P, and
# the translation h -> h + t x + s y by f -> f + B (t, s).


def _r31_parts(m: ImmutableMatrix) -> tuple[ImmutableMatrix, ImmutableMatrix, Rational]:
    b = mat([[_coef(m, "a2"), _coef(m, "a3")], [_coef(m, "a3"), _coef(m, "b3")]])
    return b, column([_coef(m, "a1"), _coef(m, "b1")]), _coef(m, "c1")


def _quad(u: ImmutableMatrix, b: ImmutableMatrix, v: ImmutableMatrix) -> Rational:
    return (u.T * b * v)[0, 0]


def _r31_definite(red: _Reduction) -> ImmutableMatrix | None:
    b, _, c = _r31_parts(red.m)
    q = _congruence_diagonalizer(b)
    d2 = (q.T * b * q)[1, 1]
    dq = det(q)
    p = rational_sqrt(abs(c * d2) / dq**2) if c != 0 else 1
    if p is None:
        return None
    red.apply(_block(q * _diag(p, dq * p / d2)))
    return red.phi


def _r31_indefinite(red: _Reduction, det_b: Rational) -> ImmutableMatrix | None:
    a3 = rational_sqrt(-det_b)
    if a3 is None:
        return None
    b, _, c = _r31_parts(red.m)
    p, q, r = b[0, 0], b[0, 1], b[1, 1]
    # two independent isotropic vectors of b
    if p != 0:
        v1, v2 = column([-q + a3, p]), column([-q - a3, p])
    else:
        v1, v2 = column([1, 0]), column([-r, 2 * q])
    if _quad(v1, b, v2) / det(hstack([v1, v2], 2)) < 0:
        v1, v2 = v2, v1
    dv = det(hstack([v1, v2], 2))
    alpha = c / dv if c != 0 else 1
    red.apply(_block(hstack([alpha * v1, v2], 2)))
    return red.phi


def _classify_r3_one(label: CatalogLabel, red: _Reduction) -> Outcome:
    b, f, c1 = _r31_parts(red.m)
    det_b = det(b)
    if det_b != 0:
        _zero_by_translation(red, ("a1", "b1"))
        reduced = red.k("c1")
        if det_b > 0:
            tag = ClassTag.make(label, "R31-1", {"det_b": det_b, "c1_sign": sign(reduced) * sign(b[0, 0])})
            return tag, _r31_definite(red)
        tag = ClassTag.make(label, "R31-4", {"det_b": det_b, "c1_nonzero": int(reduced != 0)})
        return tag, _r31_indefinite(red, det_b)

    if any(e != 0 for e in b):
        a2, a3 = b[0, 0], b[0, 1]
        kernel = column([a3, -a2]) if (a2, a3) != (0, 0) else column([1, 0])
        kf = (kernel.T * f)[0, 0]
        if kf != 0:
            jf = column([-f[1], f[0]])
            red.apply(_block(hstack([(_quad(jf, b, jf) / kf) * kernel, jf], 2)))
            _zero_by_translation(red, ("c1",), free=("a",))
            return ClassTag.make(label, "R31-2"), red.phi
        _zero_by_translation(red, ("a1", "b1"))
        reduced = red.k("c1")
        tag = ClassTag.make(label, "R31-3", {"c1_sign": sign(reduced) * sign(b.trace())})
        u = column([-kernel[1], kernel[0]])
        tau = (kernel.T * kernel)[0, 0] / _quad(u, b, u)
        red.apply(_block(hstack([kernel, tau * u], 2)))
        return tag, _normalize(red, red.k("c1"), _scalar_xy)

    if any(e != 0 for e in f):
        _zero_by_translation(red, ("c1",))
        red.apply(_block(mat([[f[0], -f[1]], [f[1], f[0]]])))
        return ClassTag.make(label, "R31-7"), red.phi
    red.apply(_diag(c1, 1, 1))
    return ClassTag.make(label, "R31-8"), red.phi


# -- r'3,lambda ---------------------------------------------------------------------


def _classify_r3_prime(label: CatalogLabel, red: _Reduction) -> Outcome:
    a1, b1, c1, a3 = red.k("a1"), red.k("b1"), red.k("c1"), red.k("a3")
    if a3 != 0:
        if label.lam == 0 and a3 < 0:
            red.apply(psi())
        _zero_by_translation(red, ("a1", "b1"))
        return ClassTag.make(label, "R3P-A", {"a3": red.k("a3")}), red.phi
    if a1 == 0 and b1 == 0:
        return ClassTag.make(label, "R3P-B", {"c1_sign": sign(c1)}), _normalize(red, c1, _scalar_xy)
    ratio = c1 / (a1**2 + b1**2)
    red.apply(mat([[a1, -b1, 0], [b1, a1, 0], [0, 0, 1]]))
    return ClassTag.make(label, "R3P-C", {"ratio": ratio}), red.phi


# -- Dispatch -------------------------------------------------------------------------


def classify_solvable(label: CatalogLabel, m: ImmutableMatrix) -> Outcome:
    """Tag and candidate witness for a nonzero cobracket in the catalog basis."""
    red = _Reduction.start(m)
    fam = label.family
    if fam is Family.H3:
        outcome = _classify_h3(label, red)
    elif fam is Family.R3:
        outcome = _classify_r3(label, red)
    elif fam is Family.R3_LAMBDA and label.lam == 1:
        outcome = _classify_r3_one(label, red)
    elif fam is Family.R3_LAMBDA and label.lam == -1:
        outcome = _classify_r3_minus_one(label, red)
    elif fam is Family.R3_LAMBDA:
        outcome = _classify_r3_lambda(label, red)
    elif fam is Family.R3_PRIME_LAMBDA:
        outcome = _classify_r3_prime(label, red)
    else:
        raise UnsupportedAlgebraError(f"{label.name} is not a solvable catalog algebra")
    logger.debug("%s -> %s", label.name, outcome[0].case_id)
    return outcome


def representative_solvable(tag: ClassTag) -> ImmutableMatrix | None:
    """The printed representative of ``tag``; None outside the printed list."""
    if OUTSIDE_PUBLISHED_LIST in tag.flags:
        return None
    case = tag.case_id
    p = tag.param_dict
    lam = tag.algebra.lam
    if case == "H3-I":
        return mat([[0, 1, 0], [0, 0, 0], [0, p["b3"], -1]])
    if case == "H3-II":
        return mat([[0, 0, 0], [p["a2"], 0, 0], [0, p["b3"], 0]])
    if case == "R3-A":
        return mat([[0, 0, p["c1_sign"]], [0, 0, 0], [0, p["b3"], 0]])
    if case == "R3-B":
        return mat([[0, 1, 0], [0, 0, 0], [0, 0, 1]])
    if case in ("R3-C", "R3P-B"):
        return mat([[0, 0, p["c1_sign"]], [0, 0, 0], [0, 0, 0]])
    if case == "R3L-A":
        return mat([[0, 0, 0], [0, lam * p["a3"], 0], [p["a3"], 0, 0]])
    if case == "R3L-B1":
        return mat([[1, 0, 0], [0, 0, lam], [0, 0, 0]])
    if case == "R3L-B2":
        return mat([[0, lam, 0], [0, 0, 0], [0, 0, 1]])
    if case in ("R3L-B0", "R3M1-B0", "R31-8"):
        return mat([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    if case == "R3M1-A":
        return mat([[0, 0, 0], [0, -p["a3"], 0], [p["a3"], 0, 0]])
    if case == "R3M1-B1":
        return mat([[1, 0, p["c1"]], [0, 0, -1], [0, 0, 0]])
    if case == "R3M1-B2":
        return mat([[1, 1, p["ratio"]], [0, 0, -1], [0, 0, -1]])
    if case == "R31-1":
        return mat([[0, 0, p["c1_sign"]], [p["det_b"], 0, 0], [0, 1, 0]])
    if case == "R31-2":
        return mat([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    if case == "R31-3":
        return mat([[0, 0, p["c1_sign"]], [0, 0, 0], [0, 1, 0]])
    if case == "R31-4":
        a3 = rational_sqrt(-p["det_b"])
        if a3 is None:
            return None
        return mat([[0, 0, p["c1_nonzero"]], [0, a3, 0], [a3, 0, 0]])
    if case == "R31-7":
        return mat([[1, 0, 0], [0, 0, 1], [0, 0, 0]])
    if case == "R3P-A":
        a3 = p["a3"]
        return mat([[0, 0, 0], [-lam * a3, -a3, 0], [a3, -lam * a3, 0]])
    if case == "R3P-C":
        return mat([[1, 0, p["ratio"]], [0, 0, -1], [0, 0, 0]])
    return None
