"""figures command line: render census figure families from a stats CSV."""

from __future__ import annotations

import argparse
import sys

from .figures import FAMILIES, FigureError, render_all


def build_parser():
    parser = argparse.ArgumentParser(
        prog="figures",
        description="Render census figure families from a stats CSV.",
    )
    parser.add_argument("--stats", required=True, help="stats CSV path")
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument(
        "--families",
        help="comma-separated subset of: %s" % ", ".join(FAMILIES),
    )
    parser.add_argument("--format", choices=["svg", "png"], default="svg")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    families = None
    if args.families:
        families = [f.strip() for f in args.families.split(",") if f.strip()]
    try:
        written = render_all(args.stats, args.out, families, args.format)
    except (FigureError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
