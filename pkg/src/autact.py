"""Automorphisms of the catalog algebras and their action on cobrackets.

Automorphism matrices hold the images of the basis vectors in their
columns. A cobracket is pulled back along phi by

    delta' = (phi ^ phi)^-1 . delta . phi

which is a right action: pullback(phi psi, d) == pullback(psi, pullback(phi, d)).

Each catalog algebra has a parametrized automorphism family
(AutFamilySpec) that sample_aut draws exact rational members from, so the
orbit oracle in src.classify never leaves the rationals.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Callable

from sympy import ImmutableMatrix, Rational

from src.bialg import Cobracket, LieBialgebra
from src.errors import DocumentError, NotAnAutomorphismError, ShapeError, SingularMatrixError
from src.exactnum import (
    ZERO,
    SamplingBounds,
    det,
    hstack,
    identity,
    inverse,
    mat,
    random_rational,
    rat,
    solve_exact,
    to_rows,
)
from src.liealg import WEDGE_PAIRS, CatalogLabel, Family, LieAlgebra, catalog_build, wedge, wedge_dim

if TYPE_CHECKING:
    from src.classify.tags import ClassTag

logger = logging.getLogger(__name__)


# -- Membership -------------------------------------------------------------


def is_lie_automorphism(g: LieAlgebra, phi: ImmutableMatrix) -> bool:
    """True iff phi is invertible and phi[e_i, e_j] == [phi e_i, phi e_j]."""
    n = g.dim
    if phi.rows != n or phi.cols != n:
        return False
    if det(phi) == 0:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            lhs = phi * g.bracket_basis(i, j)
            rhs = g.bracket(phi[:, i], phi[:, j])
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class Automorphism:
    """A validated Lie algebra automorphism of ``g``."""

    g: LieAlgebra = field(compare=False, repr=False)
    phi: ImmutableMatrix

    def __post_init__(self) -> None:
        if not is_lie_automorphism(self.g, self.phi):
            raise NotAnAutomorphismError("matrix is singular or does not preserve the bracket")

    @property
    def dim(self) -> int:
        return self.phi.rows

    def compose(self, other: Automorphism) -> Automorphism:
        """self o other (apply ``other`` first)."""
        return Automorphism(self.g, ImmutableMatrix(self.phi * other.phi))

    def inverse(self) -> Automorphism:
        return Automorphism(self.g, inverse(self.phi))

    def to_dict(self) -> dict[str, Any]:
        return {"phi": to_rows(self.phi)}


def parse_phi_document(data: Any, dim: int) -> ImmutableMatrix:
    """Read ``{"phi": rows}`` or a bare list of rows into a dim x dim matrix."""
    rows = data.get("phi") if isinstance(data, dict) else data
    if not isinstance(rows, list) or len(rows) != dim:
        raise DocumentError("phi", f"expected {dim} rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise DocumentError(f"phi[{i}]", f"expected {dim} entries")
    try:
        return mat(rows)
    except ValueError as exc:
        raise DocumentError("phi", str(exc)) from exc


# -- Action on cobrackets ----------------------------------------------------


def wedge_square(phi: ImmutableMatrix) -> ImmutableMatrix:
    """Matrix of phi ^ phi on the wedge basis; column k is phi(e_p) ^ phi(e_q)."""
    n = phi.rows
    if phi.cols != n or n not in WEDGE_PAIRS:
        raise ShapeError(f"wedge square of a {phi.rows}x{phi.cols} matrix")
    if det(phi) == 0:
        raise SingularMatrixError("wedge square of a singular matrix")
    cols = [wedge(phi[:, p], phi[:, q]) for p, q in WEDGE_PAIRS[n]]
    return hstack(cols, wedge_dim(n))


def _matrix_of(phi: Automorphism | ImmutableMatrix) -> ImmutableMatrix:
    return phi.phi if isinstance(phi, Automorphism) else phi


def pullback_matrix(phi: ImmutableMatrix, m: ImmutableMatrix) -> ImmutableMatrix:
    if m.cols != phi.rows:
        raise ShapeError(f"cannot pull a {m.rows}x{m.cols} cobracket back along a {phi.rows}x{phi.cols} matrix")
    return ImmutableMatrix(inverse(wedge_square(phi)) * m * phi)


def pullback(phi: Automorphism | ImmutableMatrix, d: Cobracket) -> Cobracket:
    """(phi ^ phi)^-1 . delta . phi."""
    return Cobracket(pullback_matrix(_matrix_of(phi), d.m))


def is_bialgebra_automorphism(b: LieBialgebra, phi: ImmutableMatrix) -> bool:
    return is_lie_automorphism(b.g, phi) and pullback_matrix(phi, b.delta.m) == b.delta.m


def h3_lift(s: ImmutableMatrix) -> Automorphism:
    """Section of Aut(h3) -> GL(2): the block (s, det s)."""
    if s.shape != (2, 2):
        raise ShapeError("h3 lift needs a 2x2 matrix")
    d = det(s)
    if d == 0:
        raise SingularMatrixError("h3 lift of a singular matrix")
    phi = mat([[s[0, 0], s[0, 1], 0], [s[1, 0], s[1, 1], 0], [0, 0, d]])
    return Automorphism(catalog_build(CatalogLabel(Family.H3)), phi)


# -- Families ----------------------------------------------------------------


Params = dict[str, Rational]


@dataclass(frozen=True)
class AutFamilySpec:
    """A parametrized subgroup of Aut(g) with an exact rational sampler.

    ``draw`` returns parameters that already satisfy the family
    constraints; ``discrete`` is an optional extra generator composed in
    front of a sample with probability 1/2.
    """

    label: CatalogLabel
    params: tuple[str, ...]
    build: Callable[[Params], ImmutableMatrix]
    draw: Callable[[random.Random, SamplingBounds], Params]
    constraint: str = ""
    discrete: ImmutableMatrix | None = None

    def instantiate(self, **values: object) -> ImmutableMatrix:
        return self.build({name: rat(values[name]) for name in self.params})

    def describe(self) -> dict[str, Any]:
        d: dict[str, Any] = {"label": self.label.to_dict(), "params": list(self.params)}
        if self.constraint:
            d["constraint"] = self.constraint
        if self.discrete is not None:
            d["discrete"] = to_rows(self.discrete)
        return d


def _free_draw(names: tuple[str, ...], build: Callable[[Params], ImmutableMatrix]) -> Callable[[random.Random, SamplingBounds], Params]:
    """Draw every parameter freely, rejecting singular instances."""

    def draw(rng: random.Random, bounds: SamplingBounds) -> Params:
        while True:
            params = {name: random_rational(rng, bounds) for name in names}
            if det(build(params)) != 0:
                return params

    return draw


def _family(
    label: CatalogLabel,
    names: str,
    build: Callable[[Params], ImmutableMatrix],
    constraint: str,
    discrete: ImmutableMatrix | None = None,
) -> AutFamilySpec:
    params = tuple(names.split())
    return AutFamilySpec(label, params, build, _free_draw(params, build), constraint, discrete)


def _h3(p: Params) -> ImmutableMatrix:
    lam = p["mu"] * p["nu"] - p["rho"] * p["sigma"]
    return mat([[p["mu"], p["rho"], 0], [p["sigma"], p["nu"], 0], [p["a"], p["b"], lam]])


def _r3(p: Params) -> ImmutableMatrix:
    return mat([[p["mu"], p["rho"], p["a"]], [0, p["mu"], p["b"]], [0, 0, 1]])


def _r3_lambda(p: Params) -> ImmutableMatrix:
    return mat([[p["mu"], 0, p["a"]], [0, p["nu"], p["b"]], [0, 0, 1]])


def _r3_one(p: Params) -> ImmutableMatrix:
    return mat([[p["mu"], p["rho"], p["a"]], [p["sigma"], p["nu"], p["b"]], [0, 0, 1]])


def _r3_prime(p: Params) -> ImmutableMatrix:
    return mat([[p["mu"], -p["sigma"], p["a"]], [p["sigma"], p["mu"], p["b"]], [0, 0, 1]])


def quaternion_rotation(a: Rational, b: Rational, c: Rational, d: Rational) -> ImmutableMatrix:
    """Rotation of the unit quaternion (a + bi + cj + dk)/|q|, exact for rational q."""
    n = a * a + b * b + c * c + d * d
    if n == 0:
        raise SingularMatrixError("zero quaternion")
    rows = [
        [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
        [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
        [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
    ]
    return ImmutableMatrix([[entry / n for entry in row] for row in rows])


def _su2(p: Params) -> ImmutableMatrix:
    return quaternion_rotation(p["a"], p["b"], p["c"], p["d"])


_HALF = Rational(1, 2)
_SL2_BASIS = (
    ImmutableMatrix([[_HALF, 0], [0, -_HALF]]),
    ImmutableMatrix([[0, _HALF], [_HALF, 0]]),
    ImmutableMatrix([[0, _HALF], [-_HALF, 0]]),
)


def sl2_adjoint(s: ImmutableMatrix) -> ImmutableMatrix:
    """Matrix of X -> S X S^-1 on sl(2,R) in the (u, v, w) basis."""
    if det(s) == 0:
        raise SingularMatrixError("conjugation by a singular matrix")
    s_inv = s.inv()
    cols = []
    for e in _SL2_BASIS:
        m = s * e * s_inv
        p, q, r = m[0, 0], m[0, 1], m[1, 0]
        cols.append(ImmutableMatrix([2 * p, q + r, q - r]))
    return hstack(cols, 3)


def _sl2(p: Params) -> ImmutableMatrix:
    return sl2_adjoint(ImmutableMatrix([[p["a"], p["b"]], [p["c"], p["d"]]]))


def _draw_quaternion(rng: random.Random, bounds: SamplingBounds) -> Params:
    while True:
        q = {k: random_rational(rng, bounds) for k in "abcd"}
        if any(v != 0 for v in q.values()):
            return q


def _draw_unimodular(rng: random.Random, bounds: SamplingBounds) -> Params:
    a = random_rational(rng, bounds, nonzero=True)
    b = random_rational(rng, bounds)
    c = random_rational(rng, bounds)
    return {"a": a, "b": b, "c": c, "d": (1 + b * c) / a}


_PHI0 = mat([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
_PSI = mat([[1, 0, 0], [0, -1, 0], [0, 0, -1]])


def phi0() -> ImmutableMatrix:
    """The swap x <-> y, h -> -h of r_{3,-1}."""
    return _PHI0


def psi() -> ImmutableMatrix:
    """The orientation flip x -> x, y -> -y, h -> -h of r'_{3,0}."""
    return _PSI


def aut_family(label: CatalogLabel) -> AutFamilySpec:
    """The automorphism family of the catalog algebra ``label``."""
    fam = label.family
    if fam is Family.ABELIAN2:
        return _family(label, "a b c d", lambda p: mat([[p["a"], p["b"]], [p["c"], p["d"]]]), "ad - bc != 0")
    if fam is Family.AFF2:
        return _family(label, "b d", lambda p: mat([[1, 0], [p["b"], p["d"]]]), "d != 0")
    if fam is Family.ABELIAN3:
        names = tuple(f"g{i}{j}" for i in range(3) for j in range(3))
        build = lambda p: ImmutableMatrix(3, 3, [p[n] for n in names])  # noqa: E731
        return AutFamilySpec(label, names, build, _free_draw(names, build), "det != 0")
    if fam is Family.H3:
        return _family(label, "mu rho sigma nu a b", _h3, "mu nu - rho sigma != 0")
    if fam is Family.R3:
        return _family(label, "mu rho a b", _r3, "mu != 0")
    if fam is Family.R3_LAMBDA:
        if label.lam == 1:
            return _family(label, "mu rho sigma nu a b", _r3_one, "mu nu - rho sigma != 0")
        discrete = _PHI0 if label.lam == -1 else None
        return _family(label, "mu nu a b", _r3_lambda, "mu nu != 0", discrete)
    if fam is Family.R3_PRIME_LAMBDA:
        discrete = _PSI if label.lam == 0 else None
        return _family(label, "mu sigma a b", _r3_prime, "mu^2 + sigma^2 != 0", discrete)
    if fam is Family.SU2:
        return AutFamilySpec(label, ("a", "b", "c", "d"), _su2, _draw_quaternion, "quaternion != 0")
    return AutFamilySpec(label, ("a", "b", "c", "d"), _sl2, _draw_unimodular, "ad - bc = 1")


def sample_aut(
    spec: AutFamilySpec,
    seed: int,
    count: int,
    bounds: SamplingBounds | None = None,
) -> list[Automorphism]:
    """``count`` exact automorphisms drawn deterministically from ``seed``."""
    bounds = bounds or SamplingBounds()
    rng = random.Random(seed)
    g = catalog_build(spec.label)
    samples = []
    for _ in range(count):
        params = spec.draw(rng, bounds)
        phi = spec.build(params)
        if spec.discrete is not None and rng.random() < 0.5:
            phi = ImmutableMatrix(spec.discrete * phi)
        logger.debug("%s sample %s", spec.label.name, {k: str(v) for k, v in params.items()})
        samples.append(Automorphism(g, phi))
    return samples


# -- Stabilizers -------------------------------------------------------------


def _h3_stabilizer(p: Params) -> ImmutableMatrix:
    return mat([[1, p["rho"], 0], [0, p["nu"], 0], [0, p["b"], p["nu"]]])


def _draw_axis_rotation(rng: random.Random, bounds: SamplingBounds) -> Params:
    while True:
        a, d = random_rational(rng, bounds), random_rational(rng, bounds)
        if a != 0 or d != 0:
            return {"a": a, "b": ZERO, "c": ZERO, "d": d}


def stabilizer_family(tag: ClassTag) -> AutFamilySpec | None:
    """Bialgebra automorphisms of the representative of ``tag``, where known."""
    label = tag.algebra
    if tag.is_trivial:
        return aut_family(label)
    case = tag.case_id
    if case == "H3-I":
        return _family(label, "rho nu b", _h3_stabilizer, "nu != 0")
    if case == "SU2":
        return AutFamilySpec(label, ("a", "b", "c", "d"), _su2, _draw_axis_rotation, "rotations about w")
    if case == "AFF2-MU":
        return _family(label, "d", lambda p: mat([[1, 0], [0, p["d"]]]), "d != 0")
    if case == "AFF2-0":
        return AutFamilySpec(
            label,
            ("b",),
            lambda p: mat([[1, 0], [p["b"], 1]]),
            lambda rng, bounds: {"b": random_rational(rng, bounds)},
        )
    return None


def identity_automorphism(g: LieAlgebra) -> Automorphism:
    return Automorphism(g, identity(g.dim))


def translation(g: LieAlgebra, a: object, b: object) -> Automorphism:
    """h -> h + a x + b y on a solvable catalog algebra, x and y fixed."""
    phi = mat([[1, 0, a], [0, 1, b], [0, 0, 1]])
    return Automorphism(g, phi)


def restrict_to_derived(phi: ImmutableMatrix, derived: list[ImmutableMatrix]) -> ImmutableMatrix | None:
    """Matrix of phi on span(derived) in that basis, or None if not invariant."""
    if not derived:
        return ImmutableMatrix.zeros(0, 0)
    base = hstack(derived, phi.rows)
    cols = []
    for v in derived:
        coords = solve_exact(base, phi * v)
        if coords is None or base * coords != phi * v:
            return None
        cols.append(coords)
    return hstack(cols, len(derived))
