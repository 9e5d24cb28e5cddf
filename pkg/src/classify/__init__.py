"""Isomorphism classes of real Lie bialgebras in dimensions 2 and 3."""

from __future__ import annotations

from src.classify.catalog import STANDARD_LABELS, normal_form_catalog, representative, trivial_tag
from src.classify.engine import classify, classify2, classify3, classify_matrix, classify_with_witness
from src.classify.oracle import orbit_check
from src.classify.recognize import recognize, recognize_class
from src.classify.tags import ClassTag, Classification, NormalForm, OrbitCheckReport

__all__ = [
    "STANDARD_LABELS",
    "ClassTag",
    "Classification",
    "NormalForm",
    "OrbitCheckReport",
    "classify",
    "classify2",
    "classify3",
    "classify_matrix",
    "classify_with_witness",
    "normal_form_catalog",
    "orbit_check",
    "recognize",
    "recognize_class",
    "representative",
    "trivial_tag",
]
