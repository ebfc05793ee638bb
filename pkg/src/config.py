"""
Run configuration
Bounds, precision and output settings shared by the CLI and the
verification harness. Defaults can be overridden from the environment
(or a .env file): INSEP_PRECISION sets the default absolute precision.
"""

import os
from dataclasses import asdict, dataclass
from typing import Dict, Optional

from dotenv import load_dotenv

from .local_fields import DEFAULT_PRECISION

OUTPUT_FORMATS = ("table", "json")


@dataclass
class RunConfig:
    """Settings for one CLI invocation or verification run."""
    base: str = "laurent:p=2,d=1"
    precision: int = DEFAULT_PRECISION
    sigma_bound: int = 12           # largest Σ(μ) for the linear-algebra oracle
    sweep_bound: Optional[int] = None  # B for exhaustive g sweeps, None means n
    sweep_limit: int = 4096         # largest family an exhaustive sweep may visit
    samples: int = 200              # random elements per (field, h, r) cell
    kr_weight: int = 8
    closed_form_weight: int = 10
    output_format: str = "table"
    seed: int = 0
    progress: bool = False

    def __post_init__(self):
        for name in ("precision", "sigma_bound", "sweep_limit", "samples",
                     "kr_weight", "closed_form_weight"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.sweep_bound is not None and self.sweep_bound < 1:
            raise ValueError(f"sweep_bound must be positive, got {self.sweep_bound}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Build a config from .env / environment defaults plus explicit overrides."""
        load_dotenv()
        precision = os.getenv("INSEP_PRECISION")
        if precision and overrides.get("precision") is None:
            try:
                overrides["precision"] = int(precision)
            except ValueError:
                raise ValueError(f"INSEP_PRECISION must be an integer, got {precision!r}")
        return cls(**{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> Dict[str, object]:
        data = asdict(self)
        data.pop("progress")
        return data
