"""Dispatch from a Lie bialgebra to its class tag and verified witness."""

from __future__ import annotations

import logging

from sympy import ImmutableMatrix

from src.autact import Automorphism, is_lie_automorphism, pullback_matrix
from src.bialg import Cobracket, LieBialgebra, dual_algebra
from src.classify.catalog import abelian3_tag, representative, trivial_tag
from src.classify.lowdim import tag_2d, witness_2d
from src.classify.recognize import recognize, recognize_class
from src.classify.simple import classify_simple
from src.classify.solvable import classify_solvable
from src.classify.tags import ClassTag, Classification
from src.errors import RecognitionError, ShapeError, SingularMatrixError
from src.exactnum import identity, is_zero
from src.liealg import CatalogLabel, Family, LieAlgebra, in_canonical_basis

logger = logging.getLogger(__name__)

_SIMPLE = (Family.SU2, Family.SL2R)


def classify_matrix(g: LieAlgebra, label: CatalogLabel, m: ImmutableMatrix) -> tuple[ClassTag, ImmutableMatrix | None]:
    """Tag of the cobracket m on g (catalog coordinates) and an unverified witness."""
    if is_zero(m):
        return trivial_tag(label), identity(g.dim)
    if label.dim == 2:
        tag = tag_2d(g, m)
        return tag, witness_2d(g, m, tag)
    if label.family is Family.ABELIAN3:
        dual = recognize_class(dual_algebra(Cobracket(m)))
        logger.debug("%s -> dual algebra %s", label.name, dual.name)
        return abelian3_tag(dual), None
    if label.family in _SIMPLE:
        return classify_simple(label, m)
    return classify_solvable(label, m)


def witness_holds(g: LieAlgebra, tag: ClassTag, m: ImmutableMatrix, phi: ImmutableMatrix) -> bool:
    """True iff phi is an automorphism of g pulling m back to the representative of tag."""
    rep = representative(tag)
    if rep is None:
        return False
    try:
        return is_lie_automorphism(g, phi) and pullback_matrix(phi, m) == rep.m
    except SingularMatrixError:
        return False


def verified_witness(
    g: LieAlgebra, tag: ClassTag, m: ImmutableMatrix, phi: ImmutableMatrix | None
) -> Automorphism | None:
    if phi is None:
        return None
    if not witness_holds(g, tag, m, phi):
        logger.warning("dropping witness for %s: it does not reach the representative", tag.render())
        return None
    return Automorphism(g, phi)


def _prepare(g: LieAlgebra) -> CatalogLabel:
    label = recognize(g)
    if label.dim == 3 and label.family is not Family.ABELIAN3 and not in_canonical_basis(g, label):
        logger.warning("recognition declined: %s is not in its catalog basis", label.name)
        raise RecognitionError(f"recognition requires canonical basis ({label.name} given in another basis)")
    return label


def classify_with_witness(b: LieBialgebra) -> Classification:
    """The class tag of ``b`` and, when the reduction is rational, a verified witness."""
    m = b.delta.m
    label = recognize(b.g)
    if is_zero(m):
        return Classification(trivial_tag(label).with_witness(True), Automorphism(b.g, identity(b.dim)))
    label = _prepare(b.g)
    tag, candidate = classify_matrix(b.g, label, m)
    witness = verified_witness(b.g, tag, m, candidate)
    return Classification(tag.with_witness(witness is not None), witness)


def classify(b: LieBialgebra) -> ClassTag:
    return classify_with_witness(b).tag


def classify2(b: LieBialgebra) -> ClassTag:
    if b.dim != 2:
        raise ShapeError(f"classify2 needs a 2-dimensional bialgebra, got dimension {b.dim}")
    return classify(b)


def classify3(b: LieBialgebra) -> ClassTag:
    if b.dim != 3:
        raise ShapeError(f"classify3 needs a 3-dimensional bialgebra, got dimension {b.dim}")
    return classify(b)
