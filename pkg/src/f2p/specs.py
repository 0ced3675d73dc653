"""Parsing and printing of format-spec strings.

Grammar (case-insensitive):

    f2p-<sr|lr|si|li>-<H>:<N>[:signed]    F2P flavor, H hyper-exp bits, N total
    <m>m<e>e:<N>                          minifloat; a sign bit is inferred
                                          when m+e == N-1, none when m+e == N
    int:<N>[:signed]                      plain integer
    sead:<N>[:signed]                     dynamic SEAD code
    fp16 | bf16 | tf32 | 2m5e | 3m4e | 4m3e | 5m2e | int8 | int16 | int19
                                          named presets (all signed)

Printing a parsed spec with :func:`format_name` re-parses to an equal spec.
"""

from __future__ import annotations

import re

from .classic import ClassicSpec, preset, PRESET_NAMES
from .codec import F2PSpec, Flavor
from .grids import FormatSpec

__all__ = ["FormatSpecError", "parse_format", "format_name", "GRAMMAR_HELP"]

GRAMMAR_HELP = (
    "format specs: f2p-<sr|lr|si|li>-<H>:<N>[:signed], <m>m<e>e:<N>, "
    "int:<N>[:signed], sead:<N>[:signed], or a preset name "
    f"({', '.join(n.lower() for n in PRESET_NAMES)})"
)

_F2P_RE = re.compile(r"f2p-(sr|lr|si|li)-(\d+):(\d+)(:signed)?$")
_FP_RE = re.compile(r"(\d+)m(\d+)e:(\d+)$")
_INT_RE = re.compile(r"(int|sead):(\d+)(:signed)?$")


class FormatSpecError(ValueError):
    """A format-spec string that does not match the grammar."""


def parse_format(text: str) -> FormatSpec:
    """Parse a format-spec string into an F2PSpec or ClassicSpec."""
    t = text.strip().lower()
    try:
        if t.upper() in PRESET_NAMES:
            return preset(t)
        if m := _F2P_RE.match(t):
            flavor, h, n, signed = m.groups()
            return F2PSpec(int(n), int(h), Flavor(flavor), signed=bool(signed))
        if m := _FP_RE.match(t):
            mant, exp, n = (int(g) for g in m.groups())
            if mant + exp == n:
                return ClassicSpec("fp", n, mant, exp, signed=False)
            if mant + exp == n - 1:
                return ClassicSpec("fp", n, mant, exp, signed=True)
            raise FormatSpecError(
                f"{text!r}: {mant}M{exp}E needs {mant + exp} or {mant + exp + 1} "
                f"total bits, not {n}"
            )
        if m := _INT_RE.match(t):
            kind, n, signed = m.groups()
            return ClassicSpec(kind, int(n), signed=bool(signed))
    except FormatSpecError:
        raise
    except ValueError as exc:
        raise FormatSpecError(f"{text!r}: {exc}") from exc
    raise FormatSpecError(f"cannot parse format spec {text!r}; {GRAMMAR_HELP}")


def format_name(spec: FormatSpec) -> str:
    """Canonical spec string; parse_format(format_name(s)) == s."""
    suffix = ":signed" if spec.signed else ""
    if isinstance(spec, F2PSpec):
        return f"f2p-{spec.flavor.value}-{spec.h}:{spec.n_total}{suffix}"
    if spec.kind == "fp":
        return f"{spec.mant_bits}m{spec.exp_bits}e:{spec.n_total}"
    return f"{spec.kind}:{spec.n_total}{suffix}"
