"""Identify the catalog family of a Lie algebra given in an arbitrary basis.

The solvable families r3,lambda and r'3,lambda are labelled by a rational
lambda. When the eigenvalues of ad on [g,g] make lambda irrational the
algebra has no catalog label, but its isomorphism type is still fixed by a
rational invariant of that action; recognize_class reports it as an
IrrationalLabel.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sympy import ImmutableMatrix, Rational

from src.errors import RecognitionError
from src.exactnum import det, hstack, in_span, inverse, rat_str, rational_sqrt, sym_signature, unit
from src.liealg import (
    CatalogLabel,
    Family,
    LieAlgebra,
    center,
    derived_subalgebra,
    in_canonical_basis,
    is_lie_algebra,
    killing_form,
)

logger = logging.getLogger(__name__)

# tr^2 / det of ad on [g,g]: (1 + lambda)^2 / lambda for r3,lambda
TRACE2_OVER_DET = "trace2_over_det"
# lambda^2 = tr^2 / (4 det - tr^2) for r'3,lambda
LAMBDA2 = "lambda2"


@dataclass(frozen=True)
class IrrationalLabel:
    """A solvable family member with irrational lambda, named by a rational invariant."""

    family: Family
    invariant: str
    value: Rational

    @property
    def name(self) -> str:
        return f"{self.family.value}({self.invariant}={rat_str(self.value)})"


def _decline(reason: str) -> RecognitionError:
    logger.warning("recognition declined: %s", reason)
    return RecognitionError(f"recognition declined: {reason}")


def _restricted_ad(g: LieAlgebra, derived: list[ImmutableMatrix]) -> ImmutableMatrix:
    """ad_z on [g,g] in the derived basis, for a basis vector z outside [g,g]."""
    z = next(unit(g.dim, i) for i in range(g.dim) if not in_span(derived, unit(g.dim, i)))
    base = hstack(derived, g.dim)
    images = hstack([g.bracket(z, v) for v in derived], g.dim)
    # base has full column rank; use the left inverse on the pivot rows
    left = inverse(base.T * base) * base.T
    return ImmutableMatrix(left * images)


def _solvable_label(g: LieAlgebra, derived: list[ImmutableMatrix]) -> CatalogLabel | IrrationalLabel:
    a = _restricted_ad(g, derived)
    tr = a.trace()
    dt = det(a)
    disc = tr * tr - 4 * dt
    if disc == 0:
        if a == (tr / 2) * ImmutableMatrix.eye(2):
            return CatalogLabel(Family.R3_LAMBDA, 1)
        return CatalogLabel(Family.R3)
    if disc > 0:
        if tr == 0:
            return CatalogLabel(Family.R3_LAMBDA, -1)
        root = rational_sqrt(disc)
        if root is None:
            return IrrationalLabel(Family.R3_LAMBDA, TRACE2_OVER_DET, tr * tr / dt)
        e1, e2 = (tr + root) / 2, (tr - root) / 2
        small, large = sorted((e1, e2), key=abs)
        return CatalogLabel(Family.R3_LAMBDA, small / large)
    lam2 = tr * tr / (4 * dt - tr * tr)
    lam = rational_sqrt(lam2)
    if lam is None:
        return IrrationalLabel(Family.R3_PRIME_LAMBDA, LAMBDA2, lam2)
    return CatalogLabel(Family.R3_PRIME_LAMBDA, lam)


def recognize_class(g: LieAlgebra) -> CatalogLabel | IrrationalLabel:
    """The isomorphism type of ``g`` computed from basis-free invariants."""
    if g.label is not None and in_canonical_basis(g, g.label):
        return g.label
    if g.dim not in (2, 3):
        raise RecognitionError(f"no catalog family of dimension {g.dim}")
    if not is_lie_algebra(g):
        raise RecognitionError("not a Lie algebra: the Jacobi identity fails")
    derived = derived_subalgebra(g)
    if g.dim == 2:
        label = CatalogLabel(Family.ABELIAN2 if not derived else Family.AFF2)
    elif not derived:
        label = CatalogLabel(Family.ABELIAN3)
    elif len(derived) == 1:
        central = in_span(center(g), derived[0])
        label = CatalogLabel(Family.H3) if central else CatalogLabel(Family.R3_LAMBDA, 0)
    elif len(derived) == 2:
        label = _solvable_label(g, derived)
    else:
        signature = sym_signature(killing_form(g))
        if signature == (0, 3):
            label = CatalogLabel(Family.SU2)
        elif signature == (2, 1):
            label = CatalogLabel(Family.SL2R)
        else:
            raise RecognitionError(f"unexpected Killing signature {signature}")
    logger.debug("recognized %s", label.name)
    return label


def recognize(g: LieAlgebra) -> CatalogLabel:
    """The catalog label of ``g``; raises when its parameter is irrational."""
    label = recognize_class(g)
    if isinstance(label, IrrationalLabel):
        raise _decline(f"{label.name} has irrational lambda and no catalog label")
    return label
