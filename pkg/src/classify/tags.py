"""Isomorphism-class tags, classification results and oracle reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Iterable, Mapping

from sympy import Rational

from src.bialg import Cobracket
from src.errors import DocumentError
from src.exactnum import rat, rat_str, to_rows
from src.liealg import CatalogLabel

if TYPE_CHECKING:
    from src.autact import Automorphism


TRIVIAL = "TRIVIAL"
SL2_TRIVIAL = "SL2-TRI0"

OUTSIDE_PUBLISHED_LIST = "outside_published_list"
INNER_AUTOMORPHISMS_ONLY = "inner_automorphisms_only"


@dataclass(frozen=True)
class ClassTag:
    """Canonical identifier of a Lie bialgebra isomorphism class.

    ``params`` holds exact class invariants (sorted name/value pairs so tags
    hash and compare structurally). ``witness_available`` is informational
    and does not take part in equality.
    """

    algebra: CatalogLabel
    case_id: str
    params: tuple[tuple[str, Rational], ...] = ()
    flags: frozenset[str] = frozenset()
    witness_available: bool = field(default=False, compare=False)

    @classmethod
    def make(
        cls,
        algebra: CatalogLabel,
        case_id: str,
        params: Mapping[str, object] | None = None,
        flags: Iterable[str] = (),
    ) -> ClassTag:
        pairs = tuple(sorted((name, rat(value)) for name, value in (params or {}).items()))
        return cls(algebra, case_id, pairs, frozenset(flags))

    @classmethod
    def trivial(cls, algebra: CatalogLabel, flags: Iterable[str] = ()) -> ClassTag:
        return cls.make(algebra, TRIVIAL, flags=flags)

    @property
    def is_trivial(self) -> bool:
        return self.case_id in (TRIVIAL, SL2_TRIVIAL)

    @property
    def param_dict(self) -> dict[str, Rational]:
        return dict(self.params)

    def param(self, name: str) -> Rational:
        return self.param_dict[name]

    def with_witness(self, available: bool) -> ClassTag:
        return ClassTag(self.algebra, self.case_id, self.params, self.flags, available)

    def to_dict(self) -> dict[str, Any]:
        return {
            "algebra": self.algebra.to_dict(),
            "case_id": self.case_id,
            "params": {name: rat_str(value) for name, value in self.params},
            "flags": sorted(self.flags),
            "witness_available": self.witness_available,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ClassTag:
        if "case_id" not in d:
            raise DocumentError("case_id", "missing")
        try:
            params = {k: rat(v) for k, v in d.get("params", {}).items()}
        except ValueError as exc:
            raise DocumentError("params", str(exc)) from exc
        tag = cls.make(CatalogLabel.from_dict(d.get("algebra", {})), d["case_id"], params, d.get("flags", []))
        return tag.with_witness(bool(d.get("witness_available", False)))

    def render(self) -> str:
        text = f"{self.algebra.name} {self.case_id}"
        if self.params:
            text += " " + " ".join(f"{k}={rat_str(v)}" for k, v in self.params)
        if self.flags:
            text += " [" + ", ".join(sorted(self.flags)) + "]"
        return text


@dataclass(frozen=True)
class Classification:
    """A tag plus, when the reduction stays rational, a verified witness.

    The witness phi satisfies pullback(phi, delta) == representative(tag).
    """

    tag: ClassTag
    witness: Automorphism | None = None

    def to_dict(self) -> dict[str, Any]:
        d = self.tag.to_dict()
        if self.witness is not None:
            d["witness"] = to_rows(self.witness.phi)
        return d


@dataclass(frozen=True)
class NormalForm:
    """One printed representative of a catalog algebra's classification."""

    tag: ClassTag
    delta: Cobracket
    redundant_of: str | None = None

    def to_dict(self) -> dict[str, Any]:
        d = {"tag": self.tag.to_dict(), "cobracket": self.delta.to_rows()}
        if self.redundant_of:
            d["redundant_of"] = self.redundant_of
        return d


@dataclass
class OrbitCheckReport:
    """Outcome of the randomized orbit oracle for one catalog label."""

    label: CatalogLabel
    samples: int
    seed: int
    representatives: int = 0
    checked: int = 0
    failures: int = 0
    mismatches: list[dict[str, Any]] = field(default_factory=list)
    witness_mismatches: int = 0
    duplicate_tags: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.witness_mismatches == 0 and not self.duplicate_tags

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label.to_dict(),
            "samples": self.samples,
            "seed": self.seed,
            "representatives": self.representatives,
            "checked": self.checked,
            "failures": self.failures,
            "witness_mismatches": self.witness_mismatches,
            "duplicate_tags": list(self.duplicate_tags),
            "mismatches": list(self.mismatches),
            "passed": self.passed,
        }
