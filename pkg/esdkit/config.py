from __future__ import annotations
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, List, Optional

import numpy as np

from .channels import BathModel, BathParams, bath_model, power_profile

FAMILIES = ("thermal", "squeezed", "qnd")
FORMATS = ("csv", "json")
GRIDS = ("lin", "geo")
AXES = ("N", "N_th", "r", "gamma")
HOLDS = ("n_th", "n_mean")


@dataclass
class RunConfig:
    """
    Settings of one CLI run. Every field is optional so a config built from flags
    can inherit from one read from a key=value file.
    """

    command: Optional[str] = None

    # Bath
    family: Optional[str] = None
    gamma: Optional[float] = None
    n_mean: Optional[float] = None
    n_th: Optional[float] = None
    r: Optional[float] = None
    phi: Optional[float] = None
    omega: Optional[float] = None
    big_phi: Optional[float] = None
    qnd_scale: Optional[float] = None
    qnd_power: Optional[float] = None

    # Time grid and search
    t_start: Optional[float] = None
    t_stop: Optional[float] = None
    t_points: Optional[int] = None
    grid: Optional[str] = None
    horizon: Optional[float] = None
    precision: Optional[float] = None
    time: Optional[float] = None

    # Sampling
    d: Optional[int] = None
    samples: Optional[int] = None
    n_qubits: Optional[int] = None
    seed: Optional[int] = None
    tol: Optional[float] = None

    # Sweeps
    axis: Optional[str] = None
    values: Optional[List[float]] = None
    hold: Optional[str] = None
    workers: Optional[int] = None

    # Output
    out: Optional[str] = None
    format: Optional[str] = None

    def merged(self, parent: Optional["RunConfig"] = None) -> "RunConfig":
        """
        Return a new RunConfig inheriting missing settings from `parent`.
        Fields explicitly set on this config take precedence.
        """
        if parent is None:
            return self

        merged_dict = {**asdict(parent)}
        for key, val in asdict(self).items():
            if val is not None:
                merged_dict[key] = val
        return RunConfig(**merged_dict)

    def with_defaults(self) -> "RunConfig":
        return self.merged(_DEFAULTS)

    # --------------------------------------------------------
    # Validation
    # --------------------------------------------------------
    def validate(self) -> "RunConfig":
        """Check the settings that do not depend on the bath physics; return self."""
        if self.family is not None and self.family not in FAMILIES:
            raise NotImplementedError(f"Unknown bath family: {self.family}")
        if self.format is not None and self.format not in FORMATS:
            raise NotImplementedError(f"Unknown output format: {self.format}")
        if self.grid is not None and self.grid not in GRIDS:
            raise ValueError(f"Time grid must be one of {GRIDS}, got {self.grid!r}")
        if self.axis is not None and self.axis not in AXES:
            raise ValueError(f"Sweep axis must be one of {AXES}, got {self.axis!r}")
        if self.hold is not None and self.hold not in HOLDS:
            raise ValueError(f"Held occupation must be one of {HOLDS}, got {self.hold!r}")
        if self.t_points is not None and self.t_points < 2:
            raise ValueError(f"Time grid needs at least 2 points, got {self.t_points}")
        if self.t_start is not None and self.t_stop is not None:
            if self.t_start < 0:
                raise ValueError(f"Time grid must start at t >= 0, got {self.t_start}")
            if not self.t_stop > self.t_start:
                raise ValueError(f"Time grid must be strictly increasing: t_start = {self.t_start}, t_stop = {self.t_stop}")
            if self.grid == "geo" and self.t_start == 0:
                raise ValueError("Geometric time grid needs t_start > 0")
        for name in ("horizon", "precision", "tol"):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ValueError(f"{name} must be > 0, got {value!r}")
        if self.time is not None and self.time < 0:
            raise ValueError(f"time must be >= 0, got {self.time!r}")
        if self.samples is not None and self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        return self

    # --------------------------------------------------------
    # Derived objects
    # --------------------------------------------------------
    def time_grid(self) -> np.ndarray:
        if self.grid == "geo":
            return np.geomspace(self.t_start, self.t_stop, self.t_points)
        return np.linspace(self.t_start, self.t_stop, self.t_points)

    def bath_params(self) -> BathParams:
        """
        BathParams from whichever occupations are set. Given both N and N_th the
        relation 2N+1 = cosh(2r)(2N_th+1) is checked rather than solved.
        """
        r = self.r or 0.0
        phi = self.phi or 0.0
        omega = self.omega or 0.0
        if self.family == "thermal" and r != 0:
            raise ValueError(f"Thermal bath needs r = 0, got r = {r!r}")

        n_mean, n_th = self.n_mean, self.n_th
        if n_mean is not None and n_th is not None:
            return BathParams(self.gamma, n_mean=n_mean, n_th=n_th, r=r, phi=phi, omega=omega, big_phi=self.big_phi)
        if n_mean is not None:
            return BathParams.from_mean(self.gamma, n_mean, r, phi=phi, omega=omega, big_phi=self.big_phi)
        return BathParams.squeezed(self.gamma, n_th or 0.0, r, phi=phi, omega=omega, big_phi=self.big_phi)

    def model(self, params: Optional[BathParams] = None) -> BathModel:
        return bath_model(
            self.family,
            params or self.bath_params(),
            gamma_fn=power_profile(self.qnd_scale, self.qnd_power),
        )

    def to_items(self) -> list[tuple[str, Any]]:
        """The set fields as (name, value) pairs in declaration order."""
        return [(f.name, getattr(self, f.name)) for f in fields(self) if getattr(self, f.name) is not None]

    # --------------------------------------------------------
    # key=value files
    # --------------------------------------------------------
    @classmethod
    def from_file(cls, path: Path | str) -> "RunConfig":
        """
        Read `key = value` lines; blank lines and lines starting with '#' are skipped.
        Keys may use dashes or underscores ("n-mean" and "n_mean" are the same field).
        """
        settings = {}
        with open(path, "r", encoding="utf-8") as f:
            for lineno, raw in enumerate(f, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
                key, value = (s.strip() for s in line.split("=", 1))
                key = _ALIASES.get(key, key.replace("-", "_"))
                if key not in _PARSERS:
                    raise ValueError(f"{path}:{lineno}: unknown setting {key!r}")
                try:
                    settings[key] = _PARSERS[key](value)
                except ValueError as e:
                    raise ValueError(f"{path}:{lineno}: bad value for {key}: {e}") from e
        return cls(**settings)


def parse_values(text: str) -> List[float]:
    """Comma-separated floats, e.g. "0,0.3,0.6"."""
    items = [s.strip() for s in text.split(",") if s.strip()]
    if not items:
        raise ValueError("expected a comma-separated list of numbers")
    return [float(s) for s in items]


_ALIASES = {"Phi": "big_phi"}

_PARSERS = {
    **{f.name: str for f in fields(RunConfig)},
    **{name: float for name in (
        "gamma", "n_mean", "n_th", "r", "phi", "omega", "big_phi", "qnd_scale", "qnd_power",
        "t_start", "t_stop", "horizon", "precision", "time", "tol",
    )},
    **{name: int for name in ("t_points", "d", "samples", "n_qubits", "seed", "workers")},
    "values": parse_values,
}

_DEFAULTS = RunConfig(
    family="thermal",
    gamma=1.0,
    qnd_scale=1.0,
    qnd_power=1.0,
    t_start=0.0,
    t_stop=5.0,
    t_points=51,
    grid="lin",
    horizon=50.0,
    precision=1e-8,
    time=0.4,
    d=2,
    samples=200,
    n_qubits=3,
    seed=0,
    tol=1e-9,
    axis="r",
    hold="n_th",
    workers=1,
)
