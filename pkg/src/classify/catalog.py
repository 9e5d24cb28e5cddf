"""Normal forms: the printed representative of every isomorphism class.

normal_form_catalog lists, per catalog algebra, one NormalForm per printed
representative. Continuous families are instantiated at a few seeded
random rational values; discrete parameters are listed in full.
"""

from __future__ import annotations

import random

from sympy import ImmutableMatrix, Rational

from src.bialg import Cobracket
from src.classify.lowdim import representative_2d
from src.classify.recognize import LAMBDA2, TRACE2_OVER_DET, IrrationalLabel
from src.classify.simple import representative_simple, sl2_trivial_tag
from src.classify.solvable import H3_SIGNATURE_CLASSES, representative_solvable
from src.classify.tags import ClassTag, NormalForm
from src.exactnum import SamplingBounds, mat, random_rational, rat
from src.liealg import CatalogLabel, Family, LieAlgebra, catalog_build

_PLANE = (Family.ABELIAN2, Family.AFF2)
_SIMPLE = (Family.SU2, Family.SL2R)

# dual algebras listed for the abelian algebra R^3
ABELIAN3_DUALS: tuple[CatalogLabel | IrrationalLabel, ...] = (
    CatalogLabel(Family.H3),
    CatalogLabel(Family.R3),
    CatalogLabel(Family.R3_LAMBDA, rat(-1)),
    CatalogLabel(Family.R3_LAMBDA, rat(0)),
    CatalogLabel(Family.R3_LAMBDA, rat("1/2")),
    CatalogLabel(Family.R3_LAMBDA, rat(1)),
    CatalogLabel(Family.R3_PRIME_LAMBDA, rat(0)),
    CatalogLabel(Family.R3_PRIME_LAMBDA, rat(1)),
    CatalogLabel(Family.SU2),
    CatalogLabel(Family.SL2R),
    IrrationalLabel(Family.R3_LAMBDA, TRACE2_OVER_DET, rat(5)),
    IrrationalLabel(Family.R3_PRIME_LAMBDA, LAMBDA2, rat(2)),
)

_ABELIAN3 = CatalogLabel(Family.ABELIAN3)
_SIGNS = (-1, 0, 1)

# one label per catalog algebra, with representative lambda values
STANDARD_LABELS: tuple[CatalogLabel, ...] = (
    CatalogLabel(Family.ABELIAN2),
    CatalogLabel(Family.AFF2),
    CatalogLabel(Family.ABELIAN3),
    CatalogLabel(Family.H3),
    CatalogLabel(Family.R3),
    CatalogLabel(Family.R3_LAMBDA, rat("1/2")),
    CatalogLabel(Family.R3_LAMBDA, rat(0)),
    CatalogLabel(Family.R3_LAMBDA, rat(-1)),
    CatalogLabel(Family.R3_LAMBDA, rat(1)),
    CatalogLabel(Family.R3_PRIME_LAMBDA, rat(0)),
    CatalogLabel(Family.R3_PRIME_LAMBDA, rat(1)),
    CatalogLabel(Family.SU2),
    CatalogLabel(Family.SL2R),
)


def trivial_tag(label: CatalogLabel) -> ClassTag:
    if label.family is Family.SL2R:
        return sl2_trivial_tag()
    return ClassTag.trivial(label)


def abelian3_tag(dual: CatalogLabel | IrrationalLabel) -> ClassTag:
    """Class of a cobracket on R^3: the isomorphism type of the dual algebra."""
    if isinstance(dual, IrrationalLabel):
        return ClassTag.make(_ABELIAN3, f"AB3-{dual.family.value}", {dual.invariant: dual.value})
    params = {"lambda": dual.lam} if dual.lam is not None else None
    return ClassTag.make(_ABELIAN3, f"AB3-{dual.family.value}", params)


def _companion_algebra(trace: Rational, determinant: Rational) -> LieAlgebra:
    """Basis (x, y, h) with ad_h on span(x, y) the companion matrix [[0, -det], [1, tr]]."""
    return LieAlgebra.from_brackets(("x", "y", "h"), {(2, 0): [0, 1, 0], (2, 1): [-determinant, trace, 0]})


def _abelian3_dual(tag: ClassTag) -> LieAlgebra:
    family = Family(tag.case_id[len("AB3-"):])
    params = tag.param_dict
    if TRACE2_OVER_DET in params:
        # tr = 1, det = 1 / k
        return _companion_algebra(rat(1), 1 / params[TRACE2_OVER_DET])
    if LAMBDA2 in params:
        # tr = 1, 4 det - 1 = 1 / lambda^2
        return _companion_algebra(rat(1), (1 + 1 / params[LAMBDA2]) / 4)
    return catalog_build(CatalogLabel(family, params.get("lambda")))


def _abelian3_representative(tag: ClassTag) -> ImmutableMatrix:
    c = _abelian3_dual(tag).c
    pairs = ((0, 1), (1, 2), (2, 0))
    return mat([[c[j][p][q] for j in range(3)] for p, q in pairs])


def representative(tag: ClassTag) -> Cobracket | None:
    """The printed normal form of ``tag``, or None when it has none over Q."""
    label = tag.algebra
    if tag.is_trivial:
        return Cobracket.zero(label.dim)
    fam = label.family
    if fam in _PLANE:
        m = representative_2d(tag)
    elif fam is Family.ABELIAN3:
        m = _abelian3_representative(tag)
    elif fam in _SIMPLE:
        m = representative_simple(tag)
    else:
        m = representative_solvable(tag)
    return None if m is None else Cobracket(m)


# -- Catalog -------------------------------------------------------------------


def _tags(label: CatalogLabel, instances: int, draw) -> list[ClassTag]:
    make = ClassTag.make
    fam, lam = label.family, label.lam
    nonzero = [draw(nonzero=True) for _ in range(instances)]
    positive = [draw(positive=True) for _ in range(instances)]
    if fam is Family.ABELIAN2:
        return [make(label, "AB2-1")]
    if fam is Family.AFF2:
        return [make(label, "AFF2-0")] + [make(label, "AFF2-MU", {"mu": v}) for v in nonzero]
    if fam is Family.ABELIAN3:
        return [abelian3_tag(dual) for dual in ABELIAN3_DUALS]
    if fam is Family.H3:
        return [make(label, "H3-I", {"b3": v}) for v in [0, *nonzero]] + [
            make(label, "H3-II", {"a2": a2, "b3": b3}) for a2, b3 in H3_SIGNATURE_CLASSES.values()
        ]
    if fam is Family.R3:
        return (
            [make(label, "R3-A", {"b3": v, "c1_sign": s}) for v in nonzero for s in _SIGNS]
            + [make(label, "R3-B")]
            + [make(label, "R3-C", {"c1_sign": s}) for s in (-1, 1)]
        )
    if fam is Family.R3_LAMBDA and lam == 1:
        return (
            [make(label, "R31-1", {"det_b": v, "c1_sign": s}) for v in positive for s in _SIGNS]
            + [make(label, "R31-2")]
            + [make(label, "R31-3", {"c1_sign": s}) for s in _SIGNS]
            + [make(label, "R31-4", {"det_b": -v * v, "c1_nonzero": n}) for v in positive for n in (0, 1)]
            + [make(label, "R31-7"), make(label, "R31-8")]
        )
    if fam is Family.R3_LAMBDA and lam == -1:
        return (
            [make(label, "R3M1-A", {"a3": v}) for v in positive]
            + [make(label, "R3M1-B0")]
            + [make(label, "R3M1-B1", {"c1": n}) for n in (0, 1)]
            + [make(label, "R3M1-B2", {"ratio": v}) for v in [0, *nonzero]]
        )
    if fam is Family.R3_LAMBDA:
        return [make(label, "R3L-A", {"a3": v}) for v in nonzero] + [
            make(label, case) for case in ("R3L-B0", "R3L-B1", "R3L-B2")
        ]
    if fam is Family.R3_PRIME_LAMBDA:
        tags = [make(label, "R3P-A", {"a3": v}) for v in (positive if lam == 0 else nonzero)]
        tags += [make(label, "R3P-B", {"c1_sign": s}) for s in (-1, 1)]
        if lam == 0:
            tags += [make(label, "R3P-C", {"ratio": v}) for v in [0, *nonzero]]
        return tags
    if fam is Family.SU2:
        return [make(label, "SU2", {"norm2": v * v}) for v in positive]
    flags = sl2_trivial_tag().flags
    return (
        [make(label, "SL2-BETA", {"beta2": v * v}, flags) for v in positive]
        + [make(label, "SL2-ALPHA", {"alpha2": v * v, "sign": s}, flags) for v in positive for s in (-1, 1)]
        + [make(label, "SL2-TRI+", flags=flags), make(label, "SL2-TRI-", flags=flags)]
    )


def _redundant_leaves(label: CatalogLabel) -> list[NormalForm]:
    """Printed r3,1 leaves that repeat another leaf up to the swap x <-> y."""
    if label.family is not Family.R3_LAMBDA or label.lam != 1:
        return []
    forms = [
        NormalForm(
            ClassTag.make(label, "R31-3", {"c1_sign": s}),
            Cobracket(mat([[0, 0, s], [1, 0, 0], [0, 0, 0]])),
            redundant_of="R31-3",
        )
        for s in _SIGNS
    ]
    forms.append(
        NormalForm(ClassTag.make(label, "R31-2"), Cobracket(mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])), redundant_of="R31-2")
    )
    return forms


def normal_form_catalog(
    label: CatalogLabel,
    instances: int = 2,
    seed: int = 7,
    bounds: SamplingBounds | None = None,
) -> list[NormalForm]:
    """Every printed representative for ``label``, starting with the zero cobracket."""
    rng = random.Random(seed)

    def draw(**kwargs: bool):
        return random_rational(rng, bounds, **kwargs)

    tags = list(dict.fromkeys([trivial_tag(label), *_tags(label, instances, draw)]))
    forms = []
    for tag in tags:
        delta = representative(tag)
        if delta is not None:
            forms.append(NormalForm(tag, delta))
    return forms + _redundant_leaves(label)
