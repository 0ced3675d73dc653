"""Grid enumeration, round-trips, nearest-encode, and classic formats."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from f2p import (
    BitPattern,
    ClassicSpec,
    EnumerationLimitError,
    F2PSpec,
    Flavor,
    bias,
    decode,
    encode_nearest,
    enumerate_grid,
    fp_decode,
    int_grid,
    pattern_dump,
    preset,
    sead_grid,
    successor,
)
from f2p.codec import magnitude_table

from .oracles import nearest_linear, ref_f2p_decode, ref_minifloat_decode

ALL_FLAVORS = list(Flavor)


@pytest.mark.parametrize("h", [1, 2])
@pytest.mark.parametrize("flavor", ALL_FLAVORS)
def test_enumeration_matches_reference_decoder(h, flavor):
    n = 8
    grid = enumerate_grid(F2PSpec(n, h, flavor))
    for bits, value in zip(grid.patterns, grid.values):
        assert float(ref_f2p_decode(int(bits), n, h, flavor.value)) == value


@pytest.mark.parametrize("flavor", ALL_FLAVORS)
def test_scalar_decode_agrees_with_vector_table(flavor):
    spec = F2PSpec(8, 2, flavor)
    table = magnitude_table(spec)
    for bits in range(256):
        assert decode(BitPattern(bits, 8), spec) == table[bits]


@pytest.mark.parametrize("h", [1, 2])
@pytest.mark.parametrize("n", [6, 8, 10])
@pytest.mark.parametrize("flavor", ALL_FLAVORS)
def test_unsigned_grid_properties(n, h, flavor):
    if n < h + (1 << h):
        pytest.skip("width too small for this hyper-exp size")
    grid = enumerate_grid(F2PSpec(n, h, flavor))
    assert len(grid) == 1 << n  # all patterns decode to distinct values
    assert np.all(np.diff(grid.values) > 0)
    # round-trip: nearest-encoding a grid value returns its own pattern
    assert np.array_equal(grid.nearest_indices(grid.values), np.arange(len(grid)))


@pytest.mark.parametrize("h", [1, 2])
@pytest.mark.parametrize("flavor", ALL_FLAVORS)
def test_wide_grids_distinct_and_round_trip(h, flavor):
    grid = enumerate_grid(F2PSpec(16, h, flavor))
    assert len(grid) == 1 << 16
    assert np.array_equal(grid.nearest_indices(grid.values), np.arange(len(grid)))


@pytest.mark.parametrize("flavor", [Flavor.SI, Flavor.LI])
def test_integer_flavors_are_integral_with_unit_minimum(flavor):
    for n, h in [(6, 1), (6, 2), (8, 2), (10, 2), (11, 3)]:
        grid = enumerate_grid(F2PSpec(n, h, flavor))
        assert np.array_equal(grid.values, np.round(grid.values))
        positive = grid.values[grid.values > 0]
        assert positive[0] == 1.0


@pytest.mark.parametrize("flavor", [Flavor.SR, Flavor.SI])
def test_small_flavors_decode_monotone_in_raw_pattern(flavor):
    for n, h in [(6, 2), (8, 1), (10, 2)]:
        table = magnitude_table(F2PSpec(n, h, flavor))
        assert np.all(np.diff(table) > 0)


def test_scale_twin_grids():
    for n, h in [(6, 1), (6, 2), (8, 2), (10, 1)]:
        for real, integer in [(Flavor.SR, Flavor.SI), (Flavor.LR, Flavor.LI)]:
            gr = enumerate_grid(F2PSpec(n, h, real))
            gi = enumerate_grid(F2PSpec(n, h, integer))
            shift = bias(F2PSpec(n, h, integer)) - bias(F2PSpec(n, h, real))
            assert np.array_equal(gi.values, gr.values * 2.0**shift)
            assert np.array_equal(gi.patterns, gr.patterns)


def test_known_extremes():
    li6 = enumerate_grid(F2PSpec(6, 2, Flavor.LI))
    assert li6.vmax == 31744 and li6.values[li6.values > 0][0] == 1
    sr6 = enumerate_grid(F2PSpec(6, 2, Flavor.SR))
    assert sr6.values[sr6.values > 0][0] == 1 / 2048 and sr6.vmax == 96
    li8 = enumerate_grid(F2PSpec(8, 2, Flavor.LI))
    assert li8.vmax == 130048


def test_signed_grid_shape_and_negative_zero():
    spec = F2PSpec(8, 2, Flavor.SR, signed=True)
    grid = enumerate_grid(spec)
    assert len(grid) == (1 << 8) - 1  # -0 collapses onto +0
    assert grid.vmin == -grid.vmax
    zero = int(np.searchsorted(grid.values, 0.0))
    assert grid.values[zero] == 0.0 and grid.pattern_at(zero).bits == 0
    neg_zero = BitPattern(1 << 7, 8)
    assert decode(neg_zero, spec) == 0.0
    assert encode_nearest(decode(neg_zero, spec), spec).bits == 0
    assert grid.index_of_pattern(neg_zero) == zero


def test_enumeration_width_guard():
    with pytest.raises(EnumerationLimitError):
        enumerate_grid(ClassicSpec("int", 25))


def test_encode_nearest_matches_linear_scan():
    rng = np.random.default_rng(123)
    for spec in [F2PSpec(6, 2, Flavor.SI), F2PSpec(6, 2, Flavor.SR),
                 F2PSpec(8, 1, Flavor.LR, signed=True)]:
        grid = enumerate_grid(spec)
        values = grid.values.tolist()
        lo, hi = values[0], values[-1]
        xs = list(rng.uniform(lo * 1.1 - 1, hi * 1.1 + 1, 300))
        # exact midpoints exercise the even-index tie rule
        xs += [(a + b) / 2 for a, b in zip(values[:40], values[1:41])]
        for x in xs:
            assert grid.nearest_index(x) == nearest_linear(values, x), (spec, x)


def test_encode_nearest_known_cases():
    si = F2PSpec(6, 2, Flavor.SI)
    # 17 is midway between 16 and 18; 16 sits at the even sorted index
    assert decode(encode_nearest(17.0, si), si) == 16.0
    assert decode(encode_nearest(0.0, si), si) == 0.0
    assert decode(encode_nearest(1e12, si), si) == 196608.0  # clamps to max
    sr = F2PSpec(6, 2, Flavor.SR)
    assert encode_nearest(18 / 2048, sr) == BitPattern.from_string("010001")
    with pytest.raises(ValueError):
        encode_nearest(float("nan"), sr)
    with pytest.raises(ValueError):
        encode_nearest(float("inf"), sr)


def test_successor_known_steps():
    # the worked 6-bit table shows 16 and 18 as consecutive si values
    si = F2PSpec(6, 2, Flavor.SI)
    assert decode(successor(encode_nearest(16.0, si), si), si) == 18.0
    # at 8 bits the li grid has the same step (its 6-bit grid jumps 16 -> 24)
    li8 = F2PSpec(8, 2, Flavor.LI)
    assert decode(successor(encode_nearest(16.0, li8), li8), li8) == 18.0
    li6 = F2PSpec(6, 2, Flavor.LI)
    assert decode(successor(encode_nearest(16.0, li6), li6), li6) == 24.0


@pytest.mark.parametrize("flavor", ALL_FLAVORS)
def test_successor_walks_the_sorted_grid(flavor):
    spec = F2PSpec(6, 2, flavor)
    grid = enumerate_grid(spec)
    assert successor(grid.pattern_at(len(grid) - 1), spec) is None
    for i in range(len(grid) - 1):
        assert successor(grid.pattern_at(i), spec) == grid.pattern_at(i + 1)
        assert decode(successor(grid.pattern_at(i), spec), spec) > decode(
            grid.pattern_at(i), spec
        )


def test_pattern_dump_row_counts_and_order():
    pats, vals = pattern_dump(F2PSpec(6, 2, Flavor.LI))
    assert pats.size == 64 and np.all(np.diff(vals) > 0)
    pats, vals = pattern_dump(preset("5M2E"))
    assert pats.size == 256  # the -0 pattern stays in the dump
    assert np.all(np.diff(vals) >= 0) and np.sum(vals == 0.0) == 2


# classic formats


@pytest.mark.parametrize("m,e", [(5, 2), (4, 3), (3, 4), (2, 5), (10, 5)])
def test_minifloat_decode_matches_textbook_oracle(m, e):
    spec = ClassicSpec("fp", m + e, m, e)
    grid = enumerate_grid(spec)
    for bits, value in zip(grid.patterns, grid.values):
        assert float(ref_minifloat_decode(int(bits), m, e)) == value
    assert fp_decode(BitPattern(0, m + e), spec) == 0.0


def test_fp16_preset_round_trips_half_precision_values():
    spec = preset("FP16")
    grid = enumerate_grid(spec)
    for x in (1.0, 0.5, 65504.0, -65504.0, 6.103515625e-05):
        i = grid.nearest_index(x)
        assert grid.values[i] == x
    assert grid.vmax == 65504.0  # top exponent holds finite values here


def test_fp_subnormal_normal_gap_continuity():
    for name in ("5M2E", "4M3E", "3M4E", "2M5E"):
        spec = preset(name)
        grid = enumerate_grid(spec)
        vals = grid.values[grid.values >= 0]
        m = spec.mant_bits
        gaps = np.diff(vals[: 2 * (1 << m)])  # subnormals + first binade
        assert np.all(gaps == gaps[0])


def test_fp_decode_signed():
    spec = preset("5M2E")
    assert fp_decode(BitPattern(0b10000001, 8), spec) == -fp_decode(
        BitPattern(0b00000001, 8), spec
    )
    with pytest.raises(ValueError):
        fp_decode(BitPattern(0, 8), ClassicSpec("int", 8))


def test_int_grids():
    g = int_grid(8)
    assert len(g) == 256 and g.vmax == 255 and np.all(np.diff(g.values) == 1)
    s = int_grid(8, signed=True)
    assert s.vmax == 127 and s.vmin == -127 and len(s) == 255
    assert np.all(np.diff(s.values) == 1)


def test_sead_four_bit_fixture():
    g = sead_grid(4)
    assert g.values.tolist() == [0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 16, 20, 24, 32]
    assert g.patterns.tolist() == list(range(16))


@pytest.mark.parametrize("n", [1, 2, 4, 8, 12])
def test_sead_grid_shape(n):
    g = sead_grid(n)
    assert len(g) == 1 << n
    gaps = np.diff(g.values)
    assert np.all(gaps > 0) and np.all(np.diff(gaps) >= 0)
    # level 0 counts with unit steps over its whole block
    block = 1 << (n - 1)
    assert np.array_equal(g.values[:block], np.arange(block, dtype=float))


def test_presets():
    assert preset("BF16") == ClassicSpec("fp", 16, 7, 8, signed=True)
    assert preset("TF32") == ClassicSpec("fp", 19, 10, 8, signed=True)
    assert preset("5m2e") == ClassicSpec("fp", 8, 5, 2, signed=True)
    assert preset("INT8") == ClassicSpec("int", 8, signed=True)
    with pytest.raises(ValueError, match="unknown preset"):
        preset("FP42")


def test_classic_spec_validation():
    with pytest.raises(ValueError):
        ClassicSpec("fp", 8, 5, 4)  # does not fill 8 bits
    with pytest.raises(ValueError):
        ClassicSpec("int", 8, 5, 2)  # split meaningless for ints
    with pytest.raises(ValueError):
        ClassicSpec("float", 8)
