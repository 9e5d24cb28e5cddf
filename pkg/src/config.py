"""Run configuration for the lieb command-line tool.

Loaded from lieb.yaml; a missing file yields the defaults below. Command
line flags override whatever the file sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import yaml

from src.cohom import DEFAULT_LAMBDA_VALUES
from src.errors import DocumentError
from src.exactnum import SamplingBounds

FORMATS = ("text", "json")


@dataclass
class RunConfig:
    seed: int = 7
    samples: int = 100
    format: str = "text"
    log_level: str = "WARNING"
    sampling: SamplingBounds = field(default_factory=SamplingBounds)
    catalog_instances: int = 2
    lambda_values: dict[str, tuple[str, ...]] = field(default_factory=lambda: dict(DEFAULT_LAMBDA_VALUES))

    @classmethod
    def load(cls, path: str = "lieb.yaml") -> RunConfig:
        """Load the run configuration from YAML."""
        try:
            with open(path) as f:
                data = yaml.safe_load(f) or {}
        except FileNotFoundError:
            return cls()
        if not isinstance(data, dict):
            raise DocumentError("config", f"{path} must hold a mapping")
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RunConfig:
        defaults = cls()
        sampling = data.get("sampling") or {}
        catalog = data.get("catalog") or {}
        cohomology = data.get("cohomology") or {}
        fmt = data.get("format", defaults.format)
        if fmt not in FORMATS:
            raise DocumentError("format", f"expected one of {FORMATS}, got {fmt!r}")
        lambda_values = dict(defaults.lambda_values)
        for family, values in (cohomology.get("lambda_values") or {}).items():
            lambda_values[family] = tuple(str(v) for v in values)
        return cls(
            seed=int(data.get("seed", defaults.seed)),
            samples=int(data.get("samples", defaults.samples)),
            format=fmt,
            log_level=str(data.get("log_level", defaults.log_level)).upper(),
            sampling=SamplingBounds(
                numerator_bound=int(sampling.get("numerator_bound", defaults.sampling.numerator_bound)),
                denominator_bound=int(sampling.get("denominator_bound", defaults.sampling.denominator_bound)),
            ),
            catalog_instances=int(catalog.get("instances", defaults.catalog_instances)),
            lambda_values=lambda_values,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "format": self.format,
            "log_level": self.log_level,
            "sampling": {
                "numerator_bound": self.sampling.numerator_bound,
                "denominator_bound": self.sampling.denominator_bound,
            },
            "catalog": {"instances": self.catalog_instances},
            "cohomology": {"lambda_values": {k: list(v) for k, v in self.lambda_values.items()}},
        }
