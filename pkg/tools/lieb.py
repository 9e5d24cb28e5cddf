#!/usr/bin/env python3
"""Command-line front end for the Lie bialgebra toolkit.

Usage:
    python -m tools.lieb validate --input bialgebra.json
    python -m tools.lieb invariants --input bialgebra.json
    python -m tools.lieb cohomology --label H3
    python -m tools.lieb cohomology --all
    python -m tools.lieb classify --input bialgebra.json --witness
    python -m tools.lieb act --input bialgebra.json --phi phi.json
    python -m tools.lieb orbit-check --label "R3Lambda,lambda=-1" --samples 100 --seed 7
    python -m tools.lieb catalog [--label Sl2R]

Exit status: 0 on success, 1 when the input fails a check (invalid
bialgebra, orbit-check failures), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

import yaml

from src.autact import Automorphism, parse_phi_document, pullback
from src.bialg import (
    LieBialgebra,
    center_image_is_invariant,
    char_derivation,
    cocycle_residual,
    coboundary_preimage,
    dual_jacobi_residual,
    is_coderivation,
    kernel_subalgebra,
    parse_bialgebra_document,
    schouten_self_bracket,
)
from src.classify import STANDARD_LABELS, classify_with_witness, normal_form_catalog, orbit_check, recognize
from src.cohom import h1_report, h1_table
from src.config import FORMATS, RunConfig
from src.errors import DocumentError, LieBialgebraError
from src.exactnum import is_zero, rat_str, to_rows
from src.liealg import CatalogLabel, Family, LieAlgebra, catalog_build, center, check_jacobi, in_canonical_basis, invariant_wedge_subspace

logger = logging.getLogger(__name__)


def parse_args(args=None):
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(prog="lieb", description="Exact classification of low-dimensional real Lie bialgebras")
    parser.add_argument("--config", default="lieb.yaml", help="YAML run configuration (default: lieb.yaml)")
    parser.add_argument("--verbose", "-v", action="count", default=0, help="Log more (repeat for debug output)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=FORMATS, help="Output format (default from config: text)")
        return p

    p = add("validate", "Check Jacobi, cocycle and co-Jacobi conditions")
    p.add_argument("--input", type=Path, required=True, help="Bialgebra JSON document")

    p = add("invariants", "Characteristic derivation, kernel and [r, r]")
    p.add_argument("--input", type=Path, required=True, help="Bialgebra JSON document")

    p = add("cohomology", "Dimensions of H^1(g, wedge^2 g)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--label", help="Catalog label NAME[,lambda=p/q]")
    group.add_argument("--input", type=Path, help="Bialgebra or algebra JSON document")
    group.add_argument("--all", action="store_true", help="The full table over every catalog column")

    p = add("classify", "Isomorphism class of a bialgebra")
    p.add_argument("--input", type=Path, required=True, help="Bialgebra JSON document")
    p.add_argument("--witness", action="store_true", help="Print the automorphism reaching the representative")

    p = add("act", "Pull a bialgebra back along an automorphism")
    p.add_argument("--input", type=Path, required=True, help="Bialgebra JSON document")
    p.add_argument("--phi", type=Path, required=True, help="Automorphism JSON document")

    p = add("orbit-check", "Randomized orbit oracle for the classifier")
    p.add_argument("--label", required=True, help="Catalog label NAME[,lambda=p/q] or 'all'")
    p.add_argument("--samples", type=int, help="Automorphisms per representative (default from config: 100)")
    p.add_argument("--seed", type=int, help="Random seed (default from config: 7)")

    p = add("catalog", "Catalog algebras or the normal forms of one algebra")
    p.add_argument("--label", help="Catalog label NAME[,lambda=p/q]; omit to list the algebras")
    p.add_argument("--seed", type=int, help="Seed for the parameter instantiations")

    return parser.parse_args(args)


# -- Input ---------------------------------------------------------------------


def _read_json(path: Path) -> Any:
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def _read_pair(path: Path):
    return parse_bialgebra_document(_read_json(path))


def _read_bialgebra(path: Path) -> LieBialgebra:
    g, d = _read_pair(path)
    return LieBialgebra(g, d)


def _parse_label(text: str) -> CatalogLabel:
    try:
        return CatalogLabel.parse(text)
    except ValueError as exc:
        raise DocumentError("label", str(exc)) from exc


def _vector(v) -> list[str]:
    return [rat_str(e) for e in v]


# -- Commands --------------------------------------------------------------------


def cmd_validate(args, config: RunConfig) -> tuple[dict[str, Any], int]:
    g, d = _read_pair(args.input)
    jacobi = sum(1 for r in check_jacobi(g) if not is_zero(r))
    cocycle = sorted(pair for pair, r in cocycle_residual(g, d).items() if not is_zero(r))
    cojacobi = sum(1 for r in dual_jacobi_residual(g, d) if not is_zero(r))
    valid = not jacobi and not cocycle and not cojacobi
    doc = {
        "jacobi": {"ok": jacobi == 0, "nonzero": jacobi},
        "cocycle": {"ok": not cocycle, "nonzero_pairs": [list(p) for p in cocycle]},
        "cojacobi": {"ok": cojacobi == 0, "nonzero": cojacobi},
        "valid": valid,
    }
    return doc, 0 if valid else 1


def _simple_label(g: LieAlgebra) -> CatalogLabel | None:
    try:
        label = recognize(g)
    except LieBialgebraError:
        return None
    if label.family in (Family.SU2, Family.SL2R) and in_canonical_basis(g, label):
        return label
    return None


def cmd_invariants(args, config: RunConfig) -> tuple[dict[str, Any], int]:
    b = _read_bialgebra(args.input)
    report = char_derivation(b)
    doc: dict[str, Any] = {
        "derivation": report.to_dict(),
        "coderivation": is_coderivation(b.delta, report.D),
        "kernel": [_vector(v) for v in kernel_subalgebra(b)],
        "center_image_invariant": center_image_is_invariant(b, center(b.g), invariant_wedge_subspace(b.g)),
    }
    label = _simple_label(b.g)
    if label is not None:
        g = catalog_build(label)
        r = coboundary_preimage(g, b.delta)
        doc["r"] = r.to_dict()
        doc["schouten"] = rat_str(schouten_self_bracket(g, r))
    return doc, 0


def cmd_cohomology(args, config: RunConfig) -> tuple[Any, int]:
    if args.all:
        return [row.to_dict() for row in h1_table(config.lambda_values)], 0
    if args.label:
        g = catalog_build(_parse_label(args.label))
    else:
        data = _read_json(args.input)
        g = LieAlgebra.from_dict(data["algebra"]) if isinstance(data, dict) and "algebra" in data else LieAlgebra.from_dict(data)
    return h1_report(g).to_dict(), 0


def cmd_classify(args, config: RunConfig) -> tuple[dict[str, Any], int]:
    result = classify_with_witness(_read_bialgebra(args.input))
    doc = result.tag.to_dict()
    if args.witness:
        doc["witness"] = to_rows(result.witness.phi) if result.witness is not None else None
    return doc, 0


def cmd_act(args, config: RunConfig) -> tuple[dict[str, Any], int]:
    b = _read_bialgebra(args.input)
    phi = Automorphism(b.g, parse_phi_document(_read_json(args.phi), b.dim))
    return LieBialgebra(b.g, pullback(phi, b.delta)).to_dict(), 0


def cmd_orbit_check(args, config: RunConfig) -> tuple[Any, int]:
    labels = list(STANDARD_LABELS) if args.label.strip().lower() == "all" else [_parse_label(args.label)]
    samples = args.samples if args.samples is not None else config.samples
    seed = args.seed if args.seed is not None else config.seed
    reports = [
        orbit_check(label, samples, seed, config.sampling, config.catalog_instances, check_witnesses=True)
        for label in labels
    ]
    status = 0 if all(r.passed for r in reports) else 1
    docs = [r.to_dict() for r in reports]
    return (docs if len(docs) > 1 else docs[0]), status


def cmd_catalog(args, config: RunConfig) -> tuple[Any, int]:
    if not args.label:
        return [{"label": label.to_dict(), "algebra": catalog_build(label).to_dict()} for label in STANDARD_LABELS], 0
    label = _parse_label(args.label)
    seed = args.seed if args.seed is not None else config.seed
    forms = normal_form_catalog(label, config.catalog_instances, seed, config.sampling)
    return {"label": label.to_dict(), "algebra": catalog_build(label).to_dict(), "normal_forms": [f.to_dict() for f in forms]}, 0


HANDLERS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "cohomology": cmd_cohomology,
    "classify": cmd_classify,
    "act": cmd_act,
    "orbit-check": cmd_orbit_check,
    "catalog": cmd_catalog,
}


# -- Text output -------------------------------------------------------------------


def _text_tag(doc: dict[str, Any]) -> str:
    label = CatalogLabel.from_dict(doc["algebra"]).name
    params = " ".join(f"{k}={v}" for k, v in sorted(doc["params"].items()))
    line = f"{label} {doc['case_id']}" + (f" {params}" if params else "")
    if doc["flags"]:
        line += " [" + ", ".join(doc["flags"]) + "]"
    return line


def _text_matrix(rows: list[list[str]], indent: str = "  ") -> list[str]:
    return [indent + " ".join(f"{v:>6}" for v in row) for row in rows]


def _text_cohomology(doc: dict[str, Any]) -> str:
    return (
        f"invariants={doc['dim_invariants']} coboundaries={doc['dim_coboundaries']} "
        f"cocycles={doc['dim_cocycles']} h1={doc['dim_h1']}"
    )


def _text_report(doc: dict[str, Any]) -> list[str]:
    label = CatalogLabel.from_dict(doc["label"]).name
    status = "PASS" if doc["passed"] else "FAIL"
    lines = [
        f"{label}: {status} representatives={doc['representatives']} checked={doc['checked']} "
        f"failures={doc['failures']} witness_mismatches={doc['witness_mismatches']}"
    ]
    lines += [f"  duplicate tag: {t}" for t in doc["duplicate_tags"]]
    lines += [f"  mismatch: {json.dumps(m, sort_keys=True)}" for m in doc["mismatches"]]
    return lines


def render_text(command: str, doc: Any) -> str:
    lines: list[str] = []
    if command == "validate":
        for axiom in ("jacobi", "cocycle", "cojacobi"):
            lines.append(f"{axiom}: {'ok' if doc[axiom]['ok'] else 'FAILS'}")
        if doc["cocycle"]["nonzero_pairs"]:
            lines.append(f"  cocycle residual on pairs {doc['cocycle']['nonzero_pairs']}")
        lines.append("valid" if doc["valid"] else "invalid")
    elif command == "invariants":
        d = doc["derivation"]
        lines.append("Delta =")
        lines += _text_matrix(d["D"])
        lines.append(f"trace={d['trace']} det={d['det']} charpoly={' '.join(d['charpoly'])}")
        lines.append(f"coderivation: {doc['coderivation']}")
        lines.append(f"kernel: {doc['kernel']}")
        lines.append(f"delta(center) invariant: {doc['center_image_invariant']}")
        if "schouten" in doc:
            r = doc["r"]
            lines.append(f"r = ({r['alpha']}, {r['beta']}, {r['gamma']})  [r,r] = {doc['schouten']}")
    elif command == "cohomology":
        if isinstance(doc, list):
            for row in doc:
                name = CatalogLabel.from_dict(row["label"]).name
                mark = "ok" if row["matches_published"] else "DIFFERS"
                lines.append(f"{row['column']:<12} {name:<28} {_text_cohomology(row)}  {mark}")
        else:
            lines.append(_text_cohomology(doc))
    elif command == "classify":
        lines.append(_text_tag(doc))
        if "witness" in doc:
            if doc["witness"] is None:
                lines.append("witness: none over Q")
            else:
                lines.append("witness:")
                lines += _text_matrix(doc["witness"])
    elif command == "act":
        lines.append("cobracket:")
        lines += _text_matrix(doc["cobracket"])
    elif command == "orbit-check":
        for report in doc if isinstance(doc, list) else [doc]:
            lines += _text_report(report)
    elif command == "catalog":
        if isinstance(doc, list):
            lines += [CatalogLabel.from_dict(entry["label"]).name for entry in doc]
        else:
            for form in doc["normal_forms"]:
                extra = f" (same class as {form['redundant_of']})" if "redundant_of" in form else ""
                lines.append(_text_tag(form["tag"]) + extra)
                lines += _text_matrix(form["cobracket"])
    return "\n".join(lines)


# -- Entry point -------------------------------------------------------------------


def _configure_logging(config: RunConfig, verbose: int) -> None:
    level = {0: config.log_level, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    """Main entry point."""
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = RunConfig.load(args.config)
    except (OSError, ValueError, yaml.YAMLError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _configure_logging(config, args.verbose)
    fmt = args.format or config.format

    try:
        doc, status = HANDLERS[args.command](args, config)
    except (DocumentError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LieBialgebraError as exc:
        logger.info("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(render_text(args.command, doc))
    return status


if __name__ == "__main__":
    sys.exit(main())
