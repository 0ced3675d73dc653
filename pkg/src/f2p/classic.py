"""Reference number formats the F2P grids are benchmarked against.

Three kinds share one spec type:

* ``int``  -- plain fixed-resolution integers (sign-magnitude when signed).
* ``fp``   -- xMyE minifloats with gradual underflow and bias
  B = -2**(exp_bits - 1).  The top exponent encodes ordinary finite values;
  there are no infinities or NaNs, so grids of different formats stay
  comparable.
* ``sead`` -- a dynamic counter format whose exponent-field *size* is
  unary-coded: ``ell`` leading ones, a zero terminator, then the mantissa.
  Level ``ell`` contributes an arithmetic progression with step 2**ell
  starting where the previous level ended; the last level (all-ones prefix)
  drops the terminator, freeing one extra mantissa bit.  The unary prefix
  burns one bit per level, which is exactly the inefficiency the
  experiments are meant to expose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bits import BitPattern

__all__ = ["ClassicSpec", "fp_decode", "preset", "PRESET_NAMES"]

_KINDS = ("int", "fp", "sead")


@dataclass(frozen=True)
class ClassicSpec:
    """A fixed-layout format: plain integer, xMyE minifloat, or SEAD."""

    kind: str
    n_total: int
    mant_bits: int | None = None
    exp_bits: int | None = None
    signed: bool = False

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        if not 1 <= self.n_total <= 64:
            raise ValueError(f"total width must be in 1..64, got {self.n_total}")
        if self.kind == "fp":
            if not self.mant_bits or not self.exp_bits:
                raise ValueError("fp format needs mant_bits >= 1 and exp_bits >= 1")
            if self.mant_bits + self.exp_bits + int(self.signed) != self.n_total:
                raise ValueError(
                    f"{self.mant_bits}M{self.exp_bits}E"
                    f"{'+sign' if self.signed else ''} does not fill "
                    f"{self.n_total} bits"
                )
        elif self.mant_bits is not None or self.exp_bits is not None:
            raise ValueError(f"{self.kind} format takes no mantissa/exponent split")
        if self.signed and self.magnitude_width < 1:
            raise ValueError("signed format needs at least one magnitude bit")

    @property
    def magnitude_width(self) -> int:
        return self.n_total - 1 if self.signed else self.n_total


def fp_decode(p: BitPattern, spec: ClassicSpec) -> float:
    """Decode a minifloat pattern; exact in 64-bit floats."""
    if spec.kind != "fp":
        raise ValueError(f"fp_decode needs an fp spec, got {spec.kind!r}")
    if p.width != spec.n_total:
        raise ValueError(f"pattern width {p.width} != format width {spec.n_total}")
    m, eb = spec.mant_bits, spec.exp_bits
    bits = p.bits
    negative = spec.signed and bits >> (m + eb)
    exp = (bits >> m) & ((1 << eb) - 1)
    mant = bits & ((1 << m) - 1)
    b = -(1 << (eb - 1))
    if exp == 0:
        value = math.ldexp(mant, b + 1 - m)
    else:
        value = math.ldexp((1 << m) + mant, exp + b - m)
    return -value if negative and value else value


def fp_magnitude_table(spec: ClassicSpec) -> np.ndarray:
    """Values of all unsigned exponent|mantissa patterns, in raw order."""
    m, eb = spec.mant_bits, spec.exp_bits
    bits = np.arange(1 << (m + eb), dtype=np.int64)
    exp = bits >> m
    mant = bits & ((1 << m) - 1)
    b = -(1 << (eb - 1))
    normal = np.ldexp((1 << m) + mant, exp + b - m)
    subnormal = np.ldexp(mant, b + 1 - m)
    return np.where(exp > 0, normal, subnormal)


def sead_magnitude_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(patterns, values) of the n-bit SEAD code, level by level."""
    pats, vals = [], []
    start = 0
    for ell in range(n):
        if ell < n - 1:
            mlen = n - 1 - ell
            prefix = ((1 << ell) - 1) << (n - ell)
        else:
            mlen = 1  # all-ones prefix: the terminator slot becomes mantissa
            prefix = ((1 << (n - 1)) - 1) << 1
        m = np.arange(1 << mlen, dtype=np.int64)
        pats.append(prefix | m)
        vals.append(start + (m << ell))
        start += (1 << mlen) << ell
    return np.concatenate(pats), np.concatenate(vals).astype(np.float64)


_PRESETS = {
    "2M5E": ClassicSpec("fp", 8, 2, 5, signed=True),
    "3M4E": ClassicSpec("fp", 8, 3, 4, signed=True),
    "4M3E": ClassicSpec("fp", 8, 4, 3, signed=True),
    "5M2E": ClassicSpec("fp", 8, 5, 2, signed=True),
    "FP16": ClassicSpec("fp", 16, 10, 5, signed=True),
    "BF16": ClassicSpec("fp", 16, 7, 8, signed=True),
    "TF32": ClassicSpec("fp", 19, 10, 8, signed=True),
    "INT8": ClassicSpec("int", 8, signed=True),
    "INT16": ClassicSpec("int", 16, signed=True),
    "INT19": ClassicSpec("int", 19, signed=True),
}

PRESET_NAMES = tuple(_PRESETS)


def preset(name: str) -> ClassicSpec:
    """Look up a named format (signed, as used for quantization)."""
    try:
        return _PRESETS[name.upper()]
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; known presets: {', '.join(PRESET_NAMES)}"
        ) from None
