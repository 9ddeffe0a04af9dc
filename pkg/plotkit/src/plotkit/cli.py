"""plot: render one sweep CSV to an image file.

Exit codes: 0 success, 1 contract violation (unknown figure, missing or
empty columns, unreadable CSV), 2 bad command line.
"""

import argparse
import sys

from .csvio import CsvContractError
from .figures import AxisScale, FigureJob, known_figures
from .render import render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot",
        description="Render a mixedfield sweep CSV to a figure file.",
    )
    parser.add_argument("--figure", required=True, choices=known_figures(),
                        help="figure id (matches the sweep preset name)")
    parser.add_argument("--csv", required=True, help="input sweep CSV path")
    parser.add_argument("--out", required=True,
                        help="output image path (.svg/.pdf/.png)")
    parser.add_argument("--scale", choices=[s.value for s in AxisScale],
                        default="linear", help="y-axis scale")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    job = FigureJob(csv_path=args.csv, figure_id=args.figure,
                    output_path=args.out, axis_scale=AxisScale(args.scale))
    try:
        result = render(job)
    except (CsvContractError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(result.output_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
