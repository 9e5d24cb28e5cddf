"""Randomized orbit oracle for the classifier.

For every printed representative the oracle draws automorphisms from the
algebra's family, pulls the representative back along each of them and
checks that the classifier returns the representative's tag again. It
also checks that the representatives themselves get pairwise distinct
tags, which is what makes the list a classification rather than a cover.
"""

from __future__ import annotations

import logging
from typing import Any

from src.autact import aut_family, pullback_matrix, sample_aut
from src.classify.catalog import normal_form_catalog
from src.classify.engine import classify_matrix, witness_holds
from src.classify.tags import OrbitCheckReport
from src.errors import LieBialgebraError
from src.exactnum import SamplingBounds, to_rows
from src.liealg import CatalogLabel, catalog_build

logger = logging.getLogger(__name__)

MAX_RECORDED_MISMATCHES = 20


def _record(report: OrbitCheckReport, entry: dict[str, Any]) -> None:
    report.failures += 1
    if len(report.mismatches) < MAX_RECORDED_MISMATCHES:
        report.mismatches.append(entry)


def orbit_check(
    label: CatalogLabel,
    samples: int,
    seed: int,
    bounds: SamplingBounds | None = None,
    instances: int = 2,
    check_witnesses: bool = False,
) -> OrbitCheckReport:
    """Classify ``samples`` random orbit images of every representative of ``label``.

    Sample streams are seeded per representative (seed * 1000 + index), so a
    report is reproducible and independent of the order of the catalog.
    """
    report = OrbitCheckReport(label, samples, seed)
    g = catalog_build(label)
    spec = aut_family(label)
    seen: dict[tuple, str] = {}
    for index, form in enumerate(normal_form_catalog(label, instances, seed, bounds)):
        report.representatives += 1
        expected, _ = classify_matrix(g, label, form.delta.m)
        if expected != form.tag:
            _record(report, {"representative": form.tag.render(), "classified_as": expected.render()})
        if form.redundant_of is None:
            key = (expected.case_id, expected.params, expected.flags)
            if key in seen:
                report.duplicate_tags.append(expected.render())
            seen[key] = form.tag.render()

        for phi in sample_aut(spec, seed * 1000 + index, samples, bounds):
            image = pullback_matrix(phi.phi, form.delta.m)
            report.checked += 1
            try:
                tag, witness = classify_matrix(g, label, image)
            except LieBialgebraError as exc:
                _record(report, {"representative": form.tag.render(), "phi": to_rows(phi.phi), "error": str(exc)})
                continue
            if tag != expected:
                _record(
                    report,
                    {"representative": expected.render(), "phi": to_rows(phi.phi), "classified_as": tag.render()},
                )
            elif check_witnesses and witness is not None and not witness_holds(g, tag, image, witness):
                report.witness_mismatches += 1
        logger.info("%s: %s checked against %d samples", label.name, form.tag.render(), samples)

    if report.duplicate_tags:
        logger.warning("%s: representatives share tags %s", label.name, report.duplicate_tags)
    return report
