"""Bit-exact codec for the F2P number family.

An F2P magnitude is laid out MSB-to-LSB as

    [hyper-exp: H bits][exponent: ell bits][mantissa: remaining bits]

where ``ell`` is the unsigned value of the hyper-exp field -- the size of
the exponent field itself floats.  Exponent vectors of different lengths
never collide because an ``ell``-bit vector encodes

    V = (2**ell - 1) + unsigned(exponent_bits)

i.e. all shorter vectors are enumerated first.  With H hyper-exp bits the
exponent field spans 0..2**H-1 bits, for val_max = 2**(2**H) - 1 distinct
codes, V in [0, val_max - 1].

Four flavors turn V into a signed exponent E and pick a bias B:

    flavor  E      B                              focus
    sr      +V     -(val_max + 1) / 2             small reals
    lr      -V     +(val_max - 1) / 2             large reals
    si      +V     N' - H - 1                     small integers
    li      -V     N' - H - 2**H + val_max - 1    large integers

(N' is the magnitude width: the total width minus the sign bit, if any.)
A magnitude with mantissa value M (fractional) then decodes exactly like an
ordinary float:

    value = 2**(E + B) * (1 + M)        if E > E_min
    value = 2**(E_min + B + 1) * M      if E == E_min   (gradual underflow)

with E_min = 0 for sr/si and E_min = -(val_max - 1) for lr/li.  The si/li
biases are chosen so the smallest positive value is exactly 1, which makes
every representable value an integer.

Special values (infinities, NaNs) do not exist in this system: every bit
pattern decodes to an ordinary finite number.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bits import BitPattern

__all__ = [
    "Flavor",
    "F2PSpec",
    "FieldSplit",
    "split_fields",
    "exponent_value",
    "exponent_encode",
    "bias",
    "e_min",
    "decode",
    "decode_exact",
    "magnitude_table",
]


class Flavor(enum.Enum):
    """Which sub-range gets the longest mantissa."""

    SR = "sr"  # small reals
    LR = "lr"  # large reals
    SI = "si"  # small integers
    LI = "li"  # large integers

    @property
    def exponent_sign(self) -> int:
        """+1 when E = V (sr/si), -1 when E = -V (lr/li)."""
        return 1 if self in (Flavor.SR, Flavor.SI) else -1

    @property
    def integer_valued(self) -> bool:
        return self in (Flavor.SI, Flavor.LI)


@dataclass(frozen=True)
class F2PSpec:
    """An F2P format: total width, hyper-exp width, flavor, signedness.

    The magnitude width N' (width minus sign bit) must satisfy
    N' >= H + 2**H so that even the longest exponent field leaves at least
    one mantissa bit.  H is capped at 3: beyond that the lr/li biases grow
    past what IEEE doubles can represent, and this library hands out values
    as 64-bit floats.
    """

    n_total: int
    h: int
    flavor: Flavor
    signed: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.h <= 3:
            raise ValueError(f"hyper-exp width must be in 1..3, got {self.h}")
        if self.n_total > 64:
            raise ValueError(f"total width must be <= 64, got {self.n_total}")
        need = self.h + (1 << self.h)
        if self.magnitude_width < need:
            raise ValueError(
                f"magnitude width {self.magnitude_width} too small for H={self.h}; "
                f"need at least {need} bits so the shortest mantissa is non-empty"
            )

    @property
    def magnitude_width(self) -> int:
        return self.n_total - 1 if self.signed else self.n_total

    @property
    def ell_max(self) -> int:
        """Largest exponent-field size: 2**H - 1."""
        return (1 << self.h) - 1

    @property
    def val_max(self) -> int:
        """Number of distinct exponent codes: 2**(2**H) - 1."""
        return (1 << (1 << self.h)) - 1


@dataclass(frozen=True)
class FieldSplit:
    """The three magnitude fields as MSB-first binary strings."""

    hyper: str
    exp: str
    mant: str


def split_fields(p: BitPattern, spec: F2PSpec) -> FieldSplit:
    """Split a magnitude pattern into hyper-exp, exponent and mantissa.

    ``p`` must already have the sign bit stripped: its width is the spec's
    magnitude width.
    """
    nm = spec.magnitude_width
    if p.width != nm:
        raise ValueError(
            f"pattern width {p.width} != magnitude width {nm} of {spec}"
        )
    s = str(p)
    hyper = s[: spec.h]
    ell = int(hyper, 2)
    return FieldSplit(hyper, s[spec.h : spec.h + ell], s[spec.h + ell :])


def exponent_value(exp: str) -> int:
    """Value of an exponent vector under the length-prefix code.

    The empty vector encodes 0; an ell-bit vector encodes (2**ell - 1) plus
    its unsigned binary value.
    """
    if set(exp) - {"0", "1"}:
        raise ValueError(f"not a binary string: {exp!r}")
    ell = len(exp)
    return ((1 << ell) - 1) + (int(exp, 2) if exp else 0)


def exponent_encode(v: int, h: int) -> tuple[int, str]:
    """Inverse of :func:`exponent_value`: V -> (ell, exponent bits).

    Valid V ranges over 0..val_max-1 for the given hyper-exp width ``h``.
    """
    val_max = (1 << (1 << h)) - 1
    if not 0 <= v <= val_max - 1:
        raise ValueError(f"exponent value {v} outside 0..{val_max - 1} for H={h}")
    ell = (v + 1).bit_length() - 1
    rest = v - ((1 << ell) - 1)
    return ell, format(rest, f"0{ell}b") if ell else ""


def bias(spec: F2PSpec) -> int:
    """The flavor's bias B (see module docstring for the table)."""
    nm = spec.magnitude_width
    vm = spec.val_max
    if spec.flavor is Flavor.SR:
        return -((vm + 1) // 2)
    if spec.flavor is Flavor.LR:
        return (vm - 1) // 2
    if spec.flavor is Flavor.SI:
        return nm - spec.h - 1
    return nm - spec.h - (1 << spec.h) + vm - 1  # LI


def e_min(spec: F2PSpec) -> int:
    """Smallest exponent value E; reaching it selects the subnormal form."""
    return 0 if spec.flavor.exponent_sign > 0 else -(spec.val_max - 1)


def decode_exact(p: BitPattern, spec: F2PSpec) -> Fraction:
    """Decode a pattern to its exact (dyadic rational) value."""
    if p.width != spec.n_total:
        raise ValueError(f"pattern width {p.width} != format width {spec.n_total}")
    negative = False
    if spec.signed:
        negative = bool(p.bits >> (spec.n_total - 1))
        p = BitPattern(p.bits & ((1 << spec.magnitude_width) - 1), spec.magnitude_width)
    fs = split_fields(p, spec)
    e = spec.flavor.exponent_sign * exponent_value(fs.exp)
    b = bias(spec)
    mant = Fraction(int(fs.mant, 2), 1 << len(fs.mant))
    if e == e_min(spec):
        value = Fraction(2) ** (e + b + 1) * mant
    else:
        value = Fraction(2) ** (e + b) * (1 + mant)
    if negative and value:
        value = -value
    return value


def decode(p: BitPattern, spec: F2PSpec) -> float:
    """Decode a pattern to a 64-bit float (exact for every supported spec)."""
    return float(decode_exact(p, spec))


def magnitude_table(spec: F2PSpec) -> np.ndarray:
    """Values of all 2**N' magnitude patterns, indexed by raw pattern.

    Vectorised per hyper-exp level; exact because every value is
    (integer) * 2**k with the integer below 2**53.
    """
    nm = spec.magnitude_width
    sign = spec.flavor.exponent_sign
    b = bias(spec)
    em = e_min(spec)
    block = 1 << (nm - spec.h)
    values = np.empty(1 << nm, dtype=np.float64)
    for ell in range(1 << spec.h):
        mlen = nm - spec.h - ell
        j = np.arange(block, dtype=np.int64)
        exp = j >> mlen
        mant = j & ((1 << mlen) - 1)
        e = sign * (((1 << ell) - 1) + exp)
        normal = np.ldexp((1 << mlen) + mant, e + b - mlen)
        subnormal = np.ldexp(mant, em + b + 1 - mlen)
        values[ell * block : (ell + 1) * block] = np.where(e != em, normal, subnormal)
    return values
