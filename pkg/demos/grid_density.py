"""Grid density across 8-bit formats
====================================

Every 8-bit format carves the same 256 patterns into a different set of
representable values.  Plain integers and mantissa-heavy minifloats are
dense but short-ranged; exponent-heavy minifloats reach far but are sparse
everywhere.  The F2P flavors buy a long range *and* a dense sub-range by
letting the exponent field grow or shrink.

Run:  python demos/grid_density.py [out.png]
"""

import sys

import numpy as np

from f2p import enumerate_grid, parse_format

FORMATS = [
    "int:8:signed",
    "5m2e:8",
    "2m5e:8",
    "f2p-sr-2:8:signed",
    "f2p-lr-2:8:signed",
]

grids = {}
for name in FORMATS:
    grid = enumerate_grid(parse_format(name))
    positive = grid.values[grid.values > 0]
    grids[name] = positive
    gaps = np.diff(positive)
    rel = gaps / positive[1:]
    print(f"{name:>20}: {positive.size:3d} positive values, "
          f"min {positive[0]:.6g}, max {positive[-1]:.6g}, "
          f"median relative step {np.median(rel):.3%}")

# Where is each grid dense?  Count values per decade.
print("\nvalues per decade of magnitude:")
edges = 10.0 ** np.arange(-3, 6)
header = "".join(f"{lo:>9.0e}" for lo in edges[:-1])
print(f"{'format':>20}{header}")
for name, positive in grids.items():
    counts = [
        int(np.sum((positive >= lo) & (positive < hi)))
        for lo, hi in zip(edges[:-1], edges[1:])
    ]
    print(f"{name:>20}" + "".join(f"{c:9d}" for c in counts))

# Optional scatter on a log axis, one row per format.
if len(sys.argv) > 1:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(9, 2.5))
    for row, (name, positive) in enumerate(grids.items()):
        ax.scatter(positive, np.full_like(positive, row), s=4, label=name)
    ax.set_xscale("log")
    ax.set_yticks(range(len(grids)), list(grids))
    ax.set_xlabel("representable positive values (log scale)")
    fig.tight_layout()
    fig.savefig(sys.argv[1], dpi=150)
    print(f"\nwrote {sys.argv[1]}")
