"""Run configuration shared by the command-line front end and the verifier."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ResolutionError
from .grid import GridSpec
from .mellin import default_log_grid


@dataclass(frozen=True)
class RunConfig:
    """Grid sizes and tolerance overrides for one run.

    ``half_width=None`` selects the self-dual grid for ``n_points``, on which
    the sampled Fourier matrix is exactly unitary.
    """

    half_width: float | None = None
    n_points: int = 1024
    basis_size: int = 48
    mellin_points: int = 4096
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.half_width is not None and not self.half_width > 0:
            raise ResolutionError(f"grid half width must be positive, got {self.half_width}")
        for name in ("n_points", "basis_size", "mellin_points"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v <= 0:
                raise ResolutionError(f"{name} must be a positive integer, got {v!r}")
        if self.n_points % 2 or self.n_points < 4:
            raise ResolutionError(f"grid points must be even and at least 4, got {self.n_points}")
        if self.mellin_points % 2 or self.mellin_points < 64:
            raise ResolutionError(
                f"mellin points must be even and at least 64, got {self.mellin_points}"
            )
        for k, v in self.tolerances.items():
            if not isinstance(v, (int, float)) or not v > 0:
                raise ResolutionError(f"tolerance {k} must be positive, got {v!r}")

    @property
    def grid(self):
        if self.half_width is None:
            return GridSpec.self_dual(self.n_points)
        return GridSpec(float(self.half_width), self.n_points)

    @property
    def log_grid(self):
        return default_log_grid(self.mellin_points)

    def tol(self, name, default):
        return float(self.tolerances.get(name, default))

    def to_dict(self):
        return dataclasses.asdict(self)

    def replace(self, **changes):
        changes = {k: v for k, v in changes.items() if v is not None}
        if "tolerances" in changes:
            changes["tolerances"] = {**self.tolerances, **changes["tolerances"]}
        return dataclasses.replace(self, **changes)

    @classmethod
    def from_file(cls, path):
        data = json.loads(Path(path).read_text())
        if not isinstance(data, dict):
            raise ResolutionError(f"{path}: config must be a JSON object")
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ResolutionError(f"{path}: unknown config keys {sorted(unknown)}")
        return cls(**data)


def parse_tolerance(text):
    """``"fourier.eigen=1e-3"`` -> ``("fourier.eigen", 1e-3)``."""
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise ValueError(f"expected NAME=VALUE, got {text!r}")
    return name.strip(), float(value)
