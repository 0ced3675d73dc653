"""F2P: a short-width float whose exponent-field size itself floats.

The package has three layers:

* the bit-exact codec and grids -- :mod:`f2p.codec`, :mod:`f2p.classic`,
  :mod:`f2p.grids`, with the spec-string grammar in :mod:`f2p.specs`;
* evaluation harnesses -- approximate counters under the on-arrival model
  (:mod:`f2p.counters`) and min-max quantization (:mod:`f2p.quant`);
* a CLI (:mod:`f2p.cli`, installed as ``f2p``) that dumps grids and runs
  both harnesses with machine-readable, seed-reproducible output.
"""

from .bits import BitPattern
from .classic import ClassicSpec, PRESET_NAMES, fp_decode, preset
from .codec import (
    F2PSpec,
    FieldSplit,
    Flavor,
    bias,
    decode,
    decode_exact,
    e_min,
    exponent_encode,
    exponent_value,
    split_fields,
)
from .counters import (
    CounterState,
    DEFAULT_DP_BUDGET,
    DpBudgetError,
    EstimatorSequence,
    OnArrivalResult,
    calibrate,
    cedar_sequence,
    dp_estimate_means,
    estimate,
    increment,
    morris_sequence,
    on_arrival_mse_dp,
    on_arrival_mse_mc,
    sequence_from_grid,
    table5_report,
)
from .grids import (
    EnumerationLimitError,
    FormatSpec,
    Grid,
    MAX_ENUM_WIDTH,
    encode_nearest,
    enumerate_grid,
    int_grid,
    pattern_dump,
    sead_grid,
    successor,
)
from .quant import (
    QuantReport,
    WeightFileError,
    WeightVector,
    load_weights,
    quantize,
    save_weights_f32,
    scale_factor,
    synth_weights,
    table6_report,
)
from .specs import FormatSpecError, format_name, parse_format

__version__ = "0.1.0"

__all__ = [
    "BitPattern",
    "ClassicSpec",
    "CounterState",
    "DEFAULT_DP_BUDGET",
    "DpBudgetError",
    "EnumerationLimitError",
    "EstimatorSequence",
    "F2PSpec",
    "FieldSplit",
    "Flavor",
    "FormatSpec",
    "FormatSpecError",
    "Grid",
    "MAX_ENUM_WIDTH",
    "OnArrivalResult",
    "PRESET_NAMES",
    "QuantReport",
    "WeightFileError",
    "WeightVector",
    "bias",
    "calibrate",
    "cedar_sequence",
    "decode",
    "decode_exact",
    "dp_estimate_means",
    "e_min",
    "encode_nearest",
    "enumerate_grid",
    "estimate",
    "exponent_encode",
    "exponent_value",
    "format_name",
    "fp_decode",
    "increment",
    "int_grid",
    "load_weights",
    "morris_sequence",
    "on_arrival_mse_dp",
    "on_arrival_mse_mc",
    "parse_format",
    "pattern_dump",
    "preset",
    "quantize",
    "save_weights_f32",
    "scale_factor",
    "sead_grid",
    "sequence_from_grid",
    "split_fields",
    "successor",
    "synth_weights",
    "table5_report",
    "table6_report",
    "__version__",
]
