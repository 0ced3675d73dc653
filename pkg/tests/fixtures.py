"""Shared worked-value fixtures for the 6-bit flavors (H=2)."""

from __future__ import annotations

from fractions import Fraction

F = Fraction

# pattern -> flavor -> exact value, for every worked 6-bit cell.
# The si value of pattern 000001 is 1: its typeset exponent elsewhere is a
# known misprint, the numeric value is authoritative.
TABLE3 = {
    "000000": {"sr": F(0), "lr": F(128), "si": F(0), "li": F(16384)},
    "000001": {"sr": F(1, 2048), "lr": F(136), "si": F(1), "li": F(17408)},
    "001111": {"sr": F(15, 2048), "lr": F(248), "si": F(15), "li": F(31744)},
    "010000": {"sr": F(16, 2048), "lr": F(64), "si": F(16), "li": F(8192)},
    "010001": {"sr": F(18, 2048), "lr": F(72), "si": F(18), "li": F(9216)},
    "010111": {"sr": F(30, 2048), "lr": F(120), "si": F(30), "li": F(15360)},
    "011000": {"sr": F(32, 2048), "lr": F(32), "si": F(32), "li": F(4096)},
    "111100": {"sr": F(32), "lr": F(1, 64), "si": F(65536), "li": F(2)},
    "111110": {"sr": F(64), "lr": F(0), "si": F(131072), "li": F(0)},
    "111111": {"sr": F(96), "lr": F(1, 128), "si": F(196608), "li": F(1)},
}

# (exponent bits, V) for every vector of up to two bits; sr reads +V, lr -V.
TABLE2 = [("", 0), ("0", 1), ("1", 2), ("00", 3), ("01", 4), ("10", 5), ("11", 6)]

# Worked biases for (N'=6, H=2).
BIASES_6_2 = {"sr": -8, "lr": 7, "si": 3, "li": 14}
