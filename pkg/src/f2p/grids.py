"""Grids: the complete sorted value set of a format, with pattern maps.

Every format in this library (F2P flavors, integers, minifloats, SEAD)
enumerates to the same structure: a strictly increasing array of values and
the bit pattern producing each one.  Signed formats use a sign bit over a
magnitude grid, so they carry 2**N - 1 distinct values (the -0 pattern
decodes to 0 and canonicalizes to the +0 pattern on encode).

Ties in round-to-nearest go to the grid value whose index in the sorted
grid is even -- a deterministic analog of half-to-even.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Union

import numpy as np

from . import classic, codec
from .bits import BitPattern
from .classic import ClassicSpec
from .codec import F2PSpec

__all__ = [
    "FormatSpec",
    "Grid",
    "EnumerationLimitError",
    "enumerate_grid",
    "pattern_dump",
    "encode_nearest",
    "successor",
    "int_grid",
    "sead_grid",
    "MAX_ENUM_WIDTH",
]

FormatSpec = Union[F2PSpec, ClassicSpec]

# Enumeration walks all 2**N patterns; refuse widths where that is no
# longer a desk-scale operation.
MAX_ENUM_WIDTH = 24


class EnumerationLimitError(ValueError):
    """Enumerating this format would walk too many patterns."""


class Grid:
    """Sorted value set of a format plus value<->pattern maps."""

    def __init__(self, spec: FormatSpec, values: np.ndarray, patterns: np.ndarray):
        if values.ndim != 1 or values.shape != patterns.shape:
            raise ValueError("values and patterns must be parallel 1-d arrays")
        if not np.all(np.diff(values) > 0):
            raise ValueError(f"grid of {spec} is not strictly increasing")
        values.flags.writeable = False
        patterns.flags.writeable = False
        self.spec = spec
        self.values = values
        self.patterns = patterns
        self._index_of: dict[int, int] | None = None

    def __len__(self) -> int:
        return self.values.size

    @property
    def vmin(self) -> float:
        return float(self.values[0])

    @property
    def vmax(self) -> float:
        return float(self.values[-1])

    def pattern_at(self, index: int) -> BitPattern:
        return BitPattern(int(self.patterns[index]), self.spec.n_total)

    def index_of_pattern(self, p: BitPattern) -> int:
        if p.width != self.spec.n_total:
            raise ValueError(f"pattern width {p.width} != format width {self.spec.n_total}")
        if self._index_of is None:
            table = {int(bits): i for i, bits in enumerate(self.patterns)}
            if self.spec.signed:
                # alias the -0 pattern to the canonical zero entry
                zero = int(np.searchsorted(self.values, 0.0))
                table.setdefault(1 << (self.spec.n_total - 1), zero)
            self._index_of = table
        return self._index_of[p.bits]

    def nearest_indices(self, x) -> np.ndarray:
        """Indices of the nearest grid values after clamping to the range.

        Exact midpoints resolve to the even sorted index.
        """
        v = self.values
        xc = np.clip(np.asarray(x, dtype=np.float64), v[0], v[-1])
        hi = np.searchsorted(v, xc, side="left")
        hi = np.minimum(hi, len(v) - 1)
        lo = np.maximum(hi - 1, 0)
        d_lo = xc - v[lo]
        d_hi = v[hi] - xc
        pick_hi = (d_hi < d_lo) | ((d_hi == d_lo) & (hi % 2 == 0))
        return np.where(pick_hi, hi, lo)

    def nearest_index(self, x: float) -> int:
        return int(self.nearest_indices(np.asarray([x]))[0])


def _magnitude_table(spec: FormatSpec) -> tuple[np.ndarray, np.ndarray]:
    """(patterns, values) over the magnitude bits, in raw pattern order."""
    nm = spec.magnitude_width
    if isinstance(spec, F2PSpec):
        mag = F2PSpec(nm, spec.h, spec.flavor, signed=False)
        return np.arange(1 << nm, dtype=np.int64), codec.magnitude_table(mag)
    if spec.kind == "int":
        return np.arange(1 << nm, dtype=np.int64), np.arange(1 << nm, dtype=np.float64)
    if spec.kind == "fp":
        return np.arange(1 << nm, dtype=np.int64), classic.fp_magnitude_table(
            ClassicSpec("fp", nm, spec.mant_bits, spec.exp_bits, signed=False)
        )
    return classic.sead_magnitude_table(nm)


@lru_cache(maxsize=128)
def enumerate_grid(spec: FormatSpec) -> Grid:
    """Decode every pattern of the format into a sorted, distinct Grid."""
    if spec.n_total > MAX_ENUM_WIDTH:
        raise EnumerationLimitError(
            f"refusing to enumerate 2**{spec.n_total} patterns "
            f"(limit is {MAX_ENUM_WIDTH} bits)"
        )
    pats, vals = _magnitude_table(spec)
    order = np.argsort(vals, kind="stable")
    vals, pats = vals[order], pats[order]
    if np.any(np.diff(vals) <= 0):
        raise ValueError(f"format {spec} decodes two patterns to the same value")
    if vals[0] != 0.0:
        raise ValueError(f"format {spec} has no zero; grids assume one")
    if spec.signed:
        sign_mask = 1 << (spec.n_total - 1)
        vals = np.concatenate([-vals[:0:-1], vals])
        pats = np.concatenate([pats[:0:-1] | sign_mask, pats])
    return Grid(spec, vals, pats.astype(np.int64))


def pattern_dump(spec: FormatSpec) -> tuple[np.ndarray, np.ndarray]:
    """(patterns, values) for all 2**N patterns, sorted by (value, pattern).

    Unlike :func:`enumerate_grid` this keeps the -0 pattern of signed
    formats, so the dump always has exactly 2**N rows.
    """
    if spec.n_total > MAX_ENUM_WIDTH:
        raise EnumerationLimitError(
            f"refusing to enumerate 2**{spec.n_total} patterns "
            f"(limit is {MAX_ENUM_WIDTH} bits)"
        )
    pats, vals = _magnitude_table(spec)
    if spec.signed:
        sign_mask = 1 << (spec.n_total - 1)
        pats = np.concatenate([pats | sign_mask, pats])
        vals = np.concatenate([-vals + 0.0, vals])  # +0.0 canonicalizes -0
    order = np.lexsort((pats, vals))
    return pats[order].astype(np.int64), vals[order]


def encode_nearest(x: float, spec: FormatSpec) -> BitPattern:
    """Pattern of the grid value nearest to ``x`` (clamped to the range)."""
    if not np.isfinite(x):
        raise ValueError(f"cannot encode non-finite value {x!r}")
    grid = enumerate_grid(spec)
    return grid.pattern_at(grid.nearest_index(float(x)))


def successor(p: BitPattern, spec: FormatSpec) -> BitPattern | None:
    """Pattern of the next larger representable value; None at the top."""
    grid = enumerate_grid(spec)
    i = grid.index_of_pattern(p)
    return None if i == len(grid) - 1 else grid.pattern_at(i + 1)


def int_grid(n: int, signed: bool = False) -> Grid:
    """Plain integer grid: 0..2**n-1, or +/-(2**(n-1)-1) sign-magnitude."""
    return enumerate_grid(ClassicSpec("int", n, signed=signed))


def sead_grid(n: int, signed: bool = False) -> Grid:
    """Grid of the n-bit dynamic SEAD code (see :mod:`f2p.classic`)."""
    return enumerate_grid(ClassicSpec("sead", n, signed=signed))
