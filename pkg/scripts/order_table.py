#!/usr/bin/env python3
"""Emit the full order/invariant table for a rectangle of (m, n) pairs.

Standalone convenience wrapper over `spgauge table`; useful when the sweep
should land in a file for diffing between revisions.

    python3 scripts/order_table.py --max-n 12 --out table.tsv
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from spgauge.orders import count_invariant_classes, gauge_modulus, samelson_order_formula


@dataclass(frozen=True)
class SweepConfig:
    max_n: int
    out: Path | None


def parse_args(argv: list[str] | None = None) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--out", type=Path, default=None, help="write TSV here instead of stdout")
    args = parser.parse_args(argv)
    if args.max_n < 2:
        parser.error("--max-n must be at least 2")
    return SweepConfig(max_n=args.max_n, out=args.out)


def rows(max_n: int):
    for m in range(1, max_n):
        for n in range(m + 1, max_n + 1):
            yield (
                m,
                n,
                samelson_order_formula(m, n).order,
                gauge_modulus(m, n),
                count_invariant_classes(m, n),
            )


def main(argv: list[str] | None = None) -> int:
    config = parse_args(argv)
    lines = ["m\tn\tsamelson\tmodulus\tclasses"]
    lines.extend("\t".join(str(v) for v in row) for row in rows(config.max_n))
    text = "\n".join(lines) + "\n"
    if config.out is None:
        sys.stdout.write(text)
    else:
        config.out.write_text(text, encoding="utf-8")
        print(f"wrote {config.max_n * (config.max_n - 1) // 2} rows to {config.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
