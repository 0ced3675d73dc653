"""Command-line front end: grid dumps, counter runs, quantization reports.

Output goes to stdout as RFC-4180 CSV (default) or JSON; logs and errors go
to stderr.  Every randomized subcommand takes an explicit --seed, and
identical flags plus seed produce byte-identical output.  Floats are
serialized with 17 significant digits; grid values, which are all dyadic
rationals, are printed as exact decimals.

Exit codes: 0 success, 2 usage error, 3 bad input data, 4 resource/budget.
"""

from __future__ import annotations

import argparse
import csv
import sys
from decimal import Decimal

from .bits import BitPattern
from .codec import F2PSpec, split_fields
from .counters import DpBudgetError, table5_report
from .grids import EnumerationLimitError, pattern_dump
from .quant import WeightFileError, load_weights, synth_weights, table6_report
from .specs import GRAMMAR_HELP, FormatSpecError, parse_format

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_RESOURCE = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f2p",
        description="F2P number-system toolbox: grids, approximate counters, "
        "min-max quantization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("grid", help="dump every pattern and value of a format")
    g.add_argument("--format", required=True, metavar="SPEC", help=GRAMMAR_HELP)
    g.add_argument("--out", choices=("csv", "json"), default="csv")

    c = sub.add_parser(
        "counter",
        help="compare F2P-LI, calibrated CEDAR/Morris, and SEAD counters",
    )
    c.add_argument("--width", type=int, required=True, help="counter width in bits")
    c.add_argument("--h", type=int, default=2, help="F2P hyper-exp width (default 2)")
    c.add_argument("--trials", type=int, default=1000)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument(
        "--target-flavor",
        choices=("li", "lr"),
        default="li",
        help="which F2P flavor's range calibrates the baselines",
    )
    c.add_argument(
        "--exact",
        action="store_true",
        help="use the exact DP evaluator instead of Monte Carlo",
    )
    c.add_argument("--out", choices=("csv", "json"), default="csv")

    q = sub.add_parser("quantize", help="min-max quantization error per format")
    q.add_argument("--input", metavar="FILE", help="weight file to quantize")
    q.add_argument("--infmt", choices=("csv", "f32"), default="csv")
    q.add_argument("--synth", metavar="DIST", help="e.g. gaussian:0,1 uniform:0,1")
    q.add_argument("--n", type=int, default=100000, help="synthetic sample size")
    q.add_argument("--seed", type=int, help="required with --synth")
    q.add_argument("--formats", required=True, help="comma-separated format specs")
    q.add_argument("--out", choices=("csv", "json"), default="csv")
    return parser


def _fmt_value(v) -> str:
    """One cell, same text in CSV and JSON."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _write_csv(records: list[dict], stream) -> None:
    writer = csv.writer(stream)  # RFC 4180: CRLF rows, minimal quoting
    if records:
        writer.writerow(records[0].keys())
    for rec in records:
        writer.writerow(_fmt_value(v) for v in rec.values())


def _json_scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, (bool, int, float, Decimal)):
        return _fmt_value(v)
    text = str(v).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def _write_json(records: list[dict], stream) -> None:
    stream.write("[\n")
    for i, rec in enumerate(records):
        fields = ", ".join(f'"{k}": {_json_scalar(v)}' for k, v in rec.items())
        comma = "," if i + 1 < len(records) else ""
        stream.write(f"  {{{fields}}}{comma}\n")
    stream.write("]\n")


def _emit(records: list[dict], out: str) -> None:
    if out == "json":
        _write_json(records, sys.stdout)
    else:
        _write_csv(records, sys.stdout)


def _cmd_grid(args) -> int:
    spec = parse_format(args.format)
    pats, vals = pattern_dump(spec)
    is_f2p = isinstance(spec, F2PSpec)
    mag_mask = (1 << spec.magnitude_width) - 1
    records = []
    for bits, value in zip(pats, vals):
        rec = {
            "schema": "grid",
            "pattern": format(int(bits), f"0{spec.n_total}b"),
            "value": Decimal(float(value)),
            "hyper": "",
            "exp": "",
            "mant": "",
        }
        if is_f2p:
            mag = BitPattern(int(bits) & mag_mask, spec.magnitude_width)
            fs = split_fields(mag, spec)
            rec.update(hyper=fs.hyper, exp=fs.exp, mant=fs.mant)
        records.append(rec)
    _emit(records, args.out)
    return EXIT_OK


def _cmd_counter(args) -> int:
    if args.seed < 0:
        raise FormatSpecError("--seed must be a nonnegative integer")
    rows = table5_report(
        [args.width],
        args.h,
        args.trials,
        args.seed,
        target_flavor=args.target_flavor,
        method="dp" if args.exact else "mc",
    )
    records = [{"schema": "counter", **row} for row in rows]
    _emit(records, args.out)
    return EXIT_OK


def _cmd_quantize(args) -> int:
    if bool(args.input) == bool(args.synth):
        raise FormatSpecError("choose exactly one input: --input FILE or --synth DIST")
    if args.synth:
        if args.seed is None or args.seed < 0:
            raise FormatSpecError("--synth requires a nonnegative --seed")
        weights = synth_weights(args.synth, args.n, args.seed)
    else:
        fmt = "raw-f32le" if args.infmt == "f32" else "csv"
        weights = load_weights(args.input, fmt)
    specs = [parse_format(text) for text in args.formats.split(",")]
    rows = table6_report(weights, specs)
    records = [{"schema": "quant", **row} for row in rows]
    _emit(records, args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        return int(exc.code or 0)
    try:
        if args.command == "grid":
            return _cmd_grid(args)
        if args.command == "counter":
            return _cmd_counter(args)
        return _cmd_quantize(args)
    except (EnumerationLimitError, DpBudgetError) as exc:
        print(f"f2p: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except WeightFileError as exc:
        print(f"f2p: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"f2p: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FormatSpecError as exc:
        print(f"f2p: {exc}\n{GRAMMAR_HELP}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"f2p: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
