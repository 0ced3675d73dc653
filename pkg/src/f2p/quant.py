"""Min-max quantization of weight vectors onto arbitrary grids.

The scale factor s = (max v - min v) / (F_max - F_min) stretches the
vector's span over the format's span (for signed sign-magnitude grids
F_min = -F_max).  Each element is then rounded on the scaled grid:

    quantized_i = s * nearest_grid_value(v_i / s)

with clamping at the grid ends.  Reported errors are |v_i - quantized_i|
and their mean square.  A constant vector would make s = 0/0; it uses the
sentinel s = 1 and simply snaps to the nearest grid point, which is what
any positive scale would do.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .grids import Grid, enumerate_grid
from .specs import format_name

__all__ = [
    "WeightVector",
    "QuantReport",
    "WeightFileError",
    "scale_factor",
    "quantize",
    "load_weights",
    "save_weights_f32",
    "synth_weights",
    "table6_report",
]


class WeightFileError(ValueError):
    """A weight file that cannot be parsed."""


@dataclass(frozen=True, eq=False)
class WeightVector:
    """A non-empty vector of finite reals, e.g. one tensor's weights."""

    values: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        vals = np.ascontiguousarray(self.values, dtype=np.float64)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("weight vector must be 1-d and non-empty")
        if not np.all(np.isfinite(vals)):
            raise ValueError("weight vector contains non-finite entries")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True, eq=False)
class QuantReport:
    """Outcome of quantizing one vector onto one grid."""

    format: str
    s: float
    quantized: np.ndarray
    errors: np.ndarray
    mse: float


def scale_factor(v: WeightVector, grid: Grid) -> float:
    """Min-max scale; 1.0 for a constant vector (see module docstring)."""
    if len(grid) < 2:
        raise ValueError("grid needs at least two values to define a span")
    spread = float(v.values.max() - v.values.min())
    return 1.0 if spread == 0.0 else spread / (grid.vmax - grid.vmin)


def quantize(v: WeightVector, grid: Grid, s: float | None = None) -> QuantReport:
    """Round a vector onto the grid at scale ``s`` (min-max by default)."""
    if s is None:
        s = scale_factor(v, grid)
    elif not s > 0:
        raise ValueError(f"scale must be positive, got {s}")
    idx = grid.nearest_indices(v.values / s)
    quantized = s * grid.values[idx]
    errors = np.abs(v.values - quantized)
    return QuantReport(
        format=format_name(grid.spec),
        s=s,
        quantized=quantized,
        errors=errors,
        mse=float(np.mean(errors * errors)),
    )


def load_weights(path, fmt: str) -> WeightVector:
    """Read weights from disk: 'csv' (one float per line) or 'raw-f32le'."""
    path = Path(path)
    if fmt == "csv":
        values = []
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                text = line.strip()
                if not text:
                    continue
                try:
                    values.append(float(text))
                except ValueError:
                    raise WeightFileError(
                        f"{path}:{lineno}: not a decimal float: {text!r}"
                    ) from None
                if not np.isfinite(values[-1]):
                    raise WeightFileError(f"{path}:{lineno}: non-finite entry {text!r}")
        if not values:
            raise WeightFileError(f"{path}: no weights found")
        return WeightVector(np.asarray(values), label=str(path))
    if fmt == "raw-f32le":
        raw = path.read_bytes()
        if not raw:
            raise WeightFileError(f"{path}: empty file")
        if len(raw) % 4:
            raise WeightFileError(
                f"{path}: size {len(raw)} is not a multiple of 4 bytes"
            )
        values = np.frombuffer(raw, dtype="<f4").astype(np.float64)
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            raise WeightFileError(f"{path}: non-finite entry at index {bad[0]}")
        return WeightVector(values, label=str(path))
    raise ValueError(f"unknown weight format {fmt!r}; use 'csv' or 'raw-f32le'")


def save_weights_f32(path, values) -> None:
    """Write values as packed little-endian float32 (lossy for doubles)."""
    arr = np.asarray(values, dtype="<f4")
    Path(path).write_bytes(arr.tobytes())


_DISTS = ("gaussian", "uniform", "lognormal")


def synth_weights(dist: str, n: int, seed: int) -> WeightVector:
    """Draw synthetic weights from 'kind:p1,p2', e.g. 'gaussian:0,1'.

    Kinds: gaussian(mu, sigma), uniform(a, b), lognormal(mu, sigma).
    Deterministic for a fixed seed (PCG64).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    kind, _, params = dist.partition(":")
    try:
        p1, p2 = (float(p) for p in params.split(","))
    except ValueError:
        raise ValueError(
            f"cannot parse distribution {dist!r}; expected kind:p1,p2 "
            f"with kind in {_DISTS}"
        ) from None
    rng = np.random.default_rng(int(seed))
    if kind == "gaussian":
        if p2 <= 0:
            raise ValueError(f"gaussian sigma must be positive, got {p2}")
        values = rng.normal(p1, p2, n)
    elif kind == "uniform":
        if p2 <= p1:
            raise ValueError(f"uniform needs a < b, got a={p1}, b={p2}")
        values = rng.uniform(p1, p2, n)
    elif kind == "lognormal":
        if p2 <= 0:
            raise ValueError(f"lognormal sigma must be positive, got {p2}")
        values = rng.lognormal(p1, p2, n)
    else:
        raise ValueError(f"unknown distribution {kind!r}; choose from {_DISTS}")
    return WeightVector(values, label=f"{dist} n={n} seed={seed}")


def table6_report(v: WeightVector, formats) -> list[dict]:
    """Quantization-error rows, normalized per total-width group.

    Formats of equal total width form one setting; each setting is
    normalized by its smallest MSE, and entries within 1% of that minimum
    are flagged green.
    """
    specs = list(formats)
    if not specs:
        raise ValueError("need at least one format")
    reports = [(spec, quantize(v, enumerate_grid(spec))) for spec in specs]
    floor_by_width: dict[int, float] = {}
    for spec, rep in reports:
        w = spec.n_total
        floor_by_width[w] = min(floor_by_width.get(w, rep.mse), rep.mse)
    rows = []
    for spec, rep in reports:
        floor_mse = floor_by_width[spec.n_total]
        if floor_mse:
            normalized = rep.mse / floor_mse
        else:
            normalized = 1.0 if rep.mse == 0.0 else float("inf")
        rows.append(
            {
                "label": v.label,
                "width": spec.n_total,
                "format": rep.format,
                "scale": rep.s,
                "mse": rep.mse,
                "normalized": normalized,
                "green": normalized <= 1.01,
            }
        )
    return rows
