"""Two-dimensional Lie bialgebras.

Five classes: the zero cobracket on either algebra, the single nonzero
class on the abelian algebra, and on aff(R) the class AFF2-0 (trace of
Delta zero) and the one-parameter family AFF2-MU (mu = trace of Delta).
The trace of Delta is a total invariant, so classify2 works in any basis.
"""

from __future__ import annotations

from sympy import ImmutableMatrix

from src.bialg import Cobracket, char_derivation_matrix
from src.classify.tags import ClassTag
from src.exactnum import mat
from src.liealg import CatalogLabel, Family, LieAlgebra, in_canonical_basis


ABELIAN2 = CatalogLabel(Family.ABELIAN2)
AFF2 = CatalogLabel(Family.AFF2)


def tag_2d(g: LieAlgebra, m: ImmutableMatrix) -> ClassTag:
    label = ABELIAN2 if g.is_abelian() else AFF2
    if all(e == 0 for e in m):
        return ClassTag.trivial(label)
    if label == ABELIAN2:
        return ClassTag.make(label, "AB2-1")
    mu = char_derivation_matrix(g, Cobracket(m)).trace()
    if mu == 0:
        return ClassTag.make(label, "AFF2-0")
    return ClassTag.make(label, "AFF2-MU", {"mu": mu})


def witness_2d(g: LieAlgebra, m: ImmutableMatrix, tag: ClassTag) -> ImmutableMatrix | None:
    """A matrix taking m to the representative, in the catalog basis only."""
    if tag.is_trivial:
        return mat([[1, 0], [0, 1]])
    if not in_canonical_basis(g, tag.algebra):
        return None
    c, d = m[0, 0], m[0, 1]
    if tag.case_id == "AB2-1":
        # (c, d) -> (c, d) phi / det phi, target (-1, 0)
        if c != 0:
            return mat([[1, d], [0, -c]])
        return mat([[0, d], [1, 0]])
    if tag.case_id == "AFF2-0":
        return mat([[1, 0], [0, c]])
    return mat([[1, 0], [-c / d, 1]])


def representative_2d(tag: ClassTag) -> ImmutableMatrix:
    if tag.is_trivial:
        return mat([[0, 0]])
    if tag.case_id == "AB2-1":
        return mat([[-1, 0]])
    if tag.case_id == "AFF2-0":
        return mat([[1, 0]])
    return mat([[0, tag.param("mu")]])
