"""Command line front end: dcl-plots CSV [CSV ...] OUT [--ref VALUE[:LABEL]]."""

from __future__ import annotations

import argparse
import sys

from .figure import CsvFormatError, PlotSpec, render


def _ref(text):
    value, _, label = text.partition(":")
    try:
        v = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad reference line {text!r}; want VALUE or VALUE:LABEL") from None
    return v, (label or value)


def build_parser():
    p = argparse.ArgumentParser(
        prog="dcl-plots",
        description="Render threshold-scan CSVs into a figure "
                    "(one curve per file, Wilson CI bands).")
    p.add_argument("csv", nargs="+", help="scan CSV files, one curve each")
    p.add_argument("out", help="output image path (.svg or .png)")
    p.add_argument("--ref", action="append", type=_ref, default=[],
                   metavar="VALUE[:LABEL]",
                   help="vertical reference line; repeatable")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = PlotSpec(tuple(args.csv), args.out, tuple(args.ref))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        out = render(spec)
    except CsvFormatError as exc:
        print(f"csv error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
