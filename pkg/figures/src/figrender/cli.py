"""Command line: figures --spec <figure_id> --in <csv> --out <image>."""

from __future__ import annotations

import argparse
import sys

from .render import FIGURES, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="figures",
        description="Render monogamy CSV outputs as figures")
    ap.add_argument("--spec", required=True, choices=sorted(FIGURES),
                    help="figure id")
    ap.add_argument("--in", dest="input_csv", required=True,
                    help="input CSV produced by the entmono CLI")
    ap.add_argument("--out", required=True, help="output .png or .svg path")
    ap.add_argument("--score", choices=("m1", "m2"), default="m1",
                    help="score column where the figure id does not fix one")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = render(FigureSpec(figure_id=args.spec, input_csv=args.input_csv,
                                   out_path=args.out, score=args.score))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(result.out_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
