"""Classification on su(2) and sl(2,R).

Every cocycle on a simple algebra is a coboundary ad(r), and an
automorphism acts on r through its wedge square. On su(2) that is the
rotation group acting on r, so |r|^2 is the complete invariant. On
sl(2,R) the unit-determinant conjugations act on r as the orthochronous
Lorentz group of alpha^2 - beta^2 - gamma^2, which leaves the quadratic
form and, on timelike and null r, the sign of alpha invariant.
"""

from __future__ import annotations

import logging

from sympy import ImmutableMatrix, Rational

from src.bialg import Cobracket, RMatrix, coboundary_from_r, coboundary_preimage
from src.classify.tags import INNER_AUTOMORPHISMS_ONLY, SL2_TRIVIAL, ClassTag
from src.exactnum import column, identity, rational_sqrt, sign
from src.liealg import CatalogLabel, Family, catalog_build

logger = logging.getLogger(__name__)

SU2 = CatalogLabel(Family.SU2)
SL2R = CatalogLabel(Family.SL2R)


def sl2_trivial_tag() -> ClassTag:
    return ClassTag.make(SL2R, SL2_TRIVIAL, flags=[INNER_AUTOMORPHISMS_ONLY])


def _householder(v: ImmutableMatrix) -> ImmutableMatrix:
    return ImmutableMatrix(identity(3) - 2 * (v * v.T) / (v.T * v)[0, 0])


def _su2_witness(r: RMatrix, norm2: Rational) -> ImmutableMatrix | None:
    """A rotation carrying r to (sqrt(norm2), 0, 0), if that root is rational.

    In (u, v, w) coordinates r corresponds to the vector (beta, gamma, alpha)
    and the pullback along a rotation R replaces it by R^-1 of that vector.
    """
    root = rational_sqrt(norm2)
    if root is None:
        return None
    rho = column([r.beta, r.gamma, r.alpha])
    target = column([0, 0, root])
    if rho == target:
        return identity(3)
    p, q, _ = rho
    normal = column([q, -p, 0]) if (p, q) != (0, 0) else column([1, 0, 0])
    return ImmutableMatrix(_householder(normal) * _householder(target - rho))


def _sl2_tag(r: RMatrix) -> ClassTag:
    q = r.alpha**2 - r.beta**2 - r.gamma**2
    flags = [INNER_AUTOMORPHISMS_ONLY]
    if q < 0:
        return ClassTag.make(SL2R, "SL2-BETA", {"beta2": -q}, flags)
    if q > 0:
        return ClassTag.make(SL2R, "SL2-ALPHA", {"alpha2": q, "sign": sign(r.alpha)}, flags)
    return ClassTag.make(SL2R, "SL2-TRI+" if r.alpha > 0 else "SL2-TRI-", flags=flags)


def classify_simple(label: CatalogLabel, m: ImmutableMatrix) -> tuple[ClassTag, ImmutableMatrix | None]:
    """Tag and candidate witness for a nonzero cobracket on su(2) or sl(2,R)."""
    g = catalog_build(label)
    r = coboundary_preimage(g, Cobracket(m))
    if label.family is Family.SU2:
        norm2 = r.alpha**2 + r.beta**2 + r.gamma**2
        tag, witness = ClassTag.make(SU2, "SU2", {"norm2": norm2}), _su2_witness(r, norm2)
    else:
        # the orbit reductions on sl(2,R) use hyperbolic rotations; no rational witness
        tag, witness = _sl2_tag(r), None
    logger.debug("%s -> %s (r = %s)", label.name, tag.case_id, r.to_dict())
    return tag, witness


def _representative_r(tag: ClassTag) -> RMatrix | None:
    case = tag.case_id
    p = tag.param_dict
    if case == "SU2":
        root = rational_sqrt(p["norm2"])
        return None if root is None else RMatrix.of(root, 0, 0)
    if case == "SL2-BETA":
        root = rational_sqrt(p["beta2"])
        return None if root is None else RMatrix.of(0, root, 0)
    if case == "SL2-ALPHA":
        root = rational_sqrt(p["alpha2"])
        return None if root is None else RMatrix.of(p["sign"] * root, 0, 0)
    if case == "SL2-TRI+":
        return RMatrix.of(1, 1, 0)
    if case == "SL2-TRI-":
        return RMatrix.of(-1, -1, 0)
    return None


def representative_simple(tag: ClassTag) -> ImmutableMatrix | None:
    r = _representative_r(tag)
    if r is None:
        return None
    return coboundary_from_r(catalog_build(tag.algebra), r).m
