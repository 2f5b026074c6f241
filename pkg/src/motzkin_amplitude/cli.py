"""Command-line interface.

Counts go to stdout as decimal strings; diagnostics go to stderr. Exit
status is 0 on success, 1 when verification fails and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import paths, statistics
from .explicit import class_counts_explicit
from .numerics import motzkin_number
from .verify import run_verification

CSV_HEADER = ("length", "height", "horizontal_at_max", "amplitude", "count")


@dataclass(frozen=True)
class OutputRecord:
    length: int
    height: int
    horizontal_at_max: bool
    count: int

    @property
    def amplitude(self) -> int:
        return 2 * self.height + (1 if self.horizontal_at_max else 0)


def distribution_records(length: int) -> list[OutputRecord]:
    """Nonempty (height, class) cells, sorted by height then flag."""
    records = []
    for h, (horiz, no_horiz) in enumerate(class_counts_explicit(length)):
        if no_horiz:
            records.append(OutputRecord(length, h, False, no_horiz))
        if horiz:
            records.append(OutputRecord(length, h, True, horiz))
    return records


def render_json(length: int, records: Sequence[OutputRecord]) -> str:
    doc = {
        "length": length,
        "motzkin": str(motzkin_number(length)),
        "cells": [
            {
                "height": r.height,
                "horizontal_at_max": r.horizontal_at_max,
                "amplitude": r.amplitude,
                "count": str(r.count),
            }
            for r in records
        ],
    }
    return json.dumps(doc, indent=2)


def render_csv(records: Sequence[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(
            (r.length, r.height, "true" if r.horizontal_at_max else "false", r.amplitude, r.count)
        )
    return buf.getvalue().rstrip("\n")


def render_table(records: Sequence[OutputRecord], group_by: str) -> str:
    if group_by == "amplitude":
        header = ("amplitude", "count")
        rows = [(r.amplitude, r.count) for r in records]
    elif group_by == "height":
        by_height: dict[int, int] = {}
        for r in records:
            by_height[r.height] = by_height.get(r.height, 0) + r.count
        header = ("height", "count")
        rows = sorted(by_height.items())
    else:
        header = ("height", "horizontal_at_max", "amplitude", "count")
        rows = [
            (r.height, "true" if r.horizontal_at_max else "false", r.amplitude, r.count)
            for r in records
        ]
    cells = [tuple(map(str, header))] + [tuple(map(str, row)) for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return "\n".join(
        "  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells
    )


def _format_fraction(x) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} ≈ {float(x):.10g}"


def cmd_count(args) -> int:
    print(motzkin_number(args.length))
    return 0


def cmd_distribution(args) -> int:
    records = distribution_records(args.length)
    if args.format == "json":
        print(render_json(args.length, records))
    elif args.format == "csv":
        print(render_csv(records))
    else:
        print(render_table(records, args.group_by))
    return 0


def cmd_mean_amplitude(args) -> int:
    if args.length == 0:
        # the only path is empty, with amplitude 0; no asymptotic comparison
        print("0")
        print("asymptotic n/a")
        print("ratio n/a")
        return 0
    report = statistics.asymptotic_report(args.length, statistics.Quantity.MEAN_AMPLITUDE)
    print(_format_fraction(report.exact_value))
    print(f"asymptotic 2*sqrt(pi*n/3) = {report.asymptotic_value:.10g}")
    print(f"ratio {report.ratio:.10g}")
    return 0


def cmd_verify(args) -> int:
    if args.brute_max > paths.BRUTE_FORCE_MAX:
        args.parser.error(f"--brute-max must be <= {paths.BRUTE_FORCE_MAX}")
    result = run_verification(args.max_length, args.brute_max)
    if result.ok:
        print(
            f"PASS ({result.cells_checked} cells checked, lengths 0..{args.max_length}, "
            f"brute force up to {min(args.brute_max, args.max_length)}, "
            "length-4 table reproduced)"
        )
        return 0
    print(f"FAIL: {result.failures[0]}")
    return 1


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkin-amplitude",
        description="Exact counts of Motzkin paths by height and amplitude.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="Motzkin number M_n")
    p.add_argument("--length", type=_nonnegative, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("distribution", help="counts per height/class/amplitude")
    p.add_argument("--length", type=_nonnegative, required=True)
    p.add_argument("--group-by", choices=("amplitude", "height", "class"), default="amplitude")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("mean-amplitude", help="exact mean amplitude vs 2*sqrt(pi*n/3)")
    p.add_argument("--length", type=_nonnegative, required=True)
    p.add_argument("--mode", choices=("exact",), default="exact")
    p.set_defaults(func=cmd_mean_amplitude)

    p = sub.add_parser("verify", help="cross-check all counting methods")
    p.add_argument("--max-length", type=_nonnegative, required=True)
    p.add_argument("--brute-max", type=_nonnegative, default=12)
    p.set_defaults(func=cmd_verify, parser=p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
