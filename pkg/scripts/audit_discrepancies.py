#!/usr/bin/env python3
"""Dump every recorded discrepancy between the printed derivation and the
recomputation, grouped by kind, with tallies.

    python3 scripts/audit_discrepancies.py --max-n 8
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from spgauge.orders import discrepancy_report


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    args = parser.parse_args(argv)
    if args.max_n < 2:
        parser.error("--max-n must be at least 2")

    report = discrepancy_report(args.max_n)
    a_pass, a_total = report.series_tally("a")
    b_pass, b_total = report.series_tally("b")
    print(f"route checks: (a) {a_pass}/{a_total}, (b) {b_pass}/{b_total}")

    tallies: Counter[str] = Counter()
    for disc in report.discrepancies:
        # group on the text before the first parameter mention
        kind = disc.where.split(" at ")[0].split(" of t^")[0]
        tallies[kind] += 1
    for kind, count in tallies.most_common():
        print(f"{count:6d}  {kind}")
    print()
    for disc in report.discrepancies:
        print(f"{disc.where}\n    stated     {disc.stated}\n    recomputed {disc.recomputed}")
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
