"""Command-line front end.

Grammar:

    spgauge order  <samelson|mapping-group|q2-group> --n INT [--m INT] [--mode ...] [--format ...]
    spgauge gauge  <invariant|compare|classes|modulus> --m INT --n INT [--k INT] [--kprime INT] [--format ...]
    spgauge table  --m INT[..INT] --n INT[..INT] [--mode ...] [--format ...]
    spgauge verify [--max-n INT] [--format ...]

Exit codes: 0 success, 1 verification failure, 2 usage error. Nothing else.
Output is deterministic: identical invocations produce byte-identical text,
JSON, and TSV. Numbers in JSON are decimal strings, since the orders overflow
64-bit integers long before n reaches interesting values.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from .chern import ChMode, LiteralFormulaError
from .orders import (
    NonIntegralOrderError,
    VerifyReport,
    count_invariant_classes,
    discrepancy_report,
    gauge_invariant,
    gauge_modulus,
    gauge_necessary_equiv,
    mapping_group_order,
    modulus_divisors,
    q2_group_order,
    q2_group_order_formula,
    samelson_order,
    samelson_order_formula,
)
from .orders import GaugeParams

_MODE_FLAGS = {"closed": ChMode.CLOSED_FORM, "convolution": ChMode.CONVOLUTION, "paper": ChMode.PAPER_LITERAL}
_DIVISOR_LIST_LIMIT = 10**6
_TEXT_DISCREPANCY_LIMIT = 20


@dataclass
class CommandResult:
    """Everything one invocation computed, ready for any output format."""

    command: str
    params: dict[str, str]
    mode: str
    result: Any
    warnings: list[str] = field(default_factory=list)
    checks: list[dict[str, Any]] | None = None

    def to_json(self) -> str:
        payload: dict[str, Any] = {
            "command": self.command,
            "params": self.params,
            "mode": self.mode,
            "result": self.result,
            "warnings": self.warnings,
        }
        if self.checks is not None:
            payload["checks"] = self.checks
        return json.dumps(payload, indent=2) + "\n"


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spgauge",
        description="Exact-arithmetic orders and homotopy-type invariants of symplectic gauge groups over S^(4m).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--mode", choices=sorted(_MODE_FLAGS), default="closed")
        p.add_argument("--format", choices=["text", "json", "tsv"], default="text")

    order = sub.add_parser("order", help="order of a Samelson product or mapping group")
    order.add_argument("kind", choices=["samelson", "mapping-group", "q2-group"])
    order.add_argument("--m", type=int)
    order.add_argument("--n", type=int, required=True)
    common(order)

    gauge = sub.add_parser("gauge", help="classification invariants of gauge groups")
    gauge.add_argument("sub", choices=["invariant", "compare", "classes", "modulus"])
    gauge.add_argument("--m", type=int, required=True)
    gauge.add_argument("--n", type=int, required=True)
    gauge.add_argument("--k", type=int)
    gauge.add_argument("--kprime", type=int)
    common(gauge)

    table = sub.add_parser("table", help="per-(m,n) sweep of orders and invariants")
    table.add_argument("--m", required=True, metavar="INT[..INT]")
    table.add_argument("--n", required=True, metavar="INT[..INT]")
    common(table)

    verify = sub.add_parser("verify", help="cross-check gcd routes against closed forms")
    verify.add_argument("--max-n", dest="max_n", type=int, default=10)
    common(verify)

    return parser


def _branch_label(m: int, n: int) -> str:
    if m % 2 == 0:
        return "4t" if n % 2 == 0 else "t"
    return "2t"


def _emit(res: CommandResult, fmt: str, text_lines: list[str], tsv_lines: list[str]) -> None:
    if fmt == "json":
        sys.stdout.write(res.to_json())
    elif fmt == "tsv":
        sys.stdout.write("\n".join(tsv_lines) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _cmd_order(args: argparse.Namespace) -> int:
    kind: str = args.kind
    mode = _MODE_FLAGS[args.mode]
    warnings: list[str] = []
    if kind == "q2-group":
        if args.n < 2:
            raise _UsageError("q2-group requires n >= 2")
        if args.m is not None:
            warnings.append("--m is ignored for q2-group")
        got = q2_group_order(args.n, mode).order
        closed = q2_group_order_formula(args.n).order
        branch = "(2n+1)!/3, n even" if args.n % 2 == 0 else "(2n+1)!/6, n odd"
        params = {"kind": kind, "n": str(args.n)}
        head = f"q2-group order, n={args.n}: {got}"
    else:
        if args.m is None:
            raise _UsageError(f"{kind} requires --m")
        if not 1 <= args.m < args.n:
            raise _UsageError(f"{kind} requires 1 <= m < n")
        fn = samelson_order if kind == "samelson" else mapping_group_order
        got = fn(args.m, args.n, mode).order
        closed = samelson_order_formula(args.m, args.n).order
        t = GaugeParams(args.m, args.n, 0).t
        branch = f"t with t={t}, m even" if args.m % 2 == 0 else f"2t with t={t}, m odd"
        params = {"kind": kind, "m": str(args.m), "n": str(args.n)}
        head = f"{kind} order, m={args.m} n={args.n}: {got}"
    agree = got == closed
    res = CommandResult(
        command="order",
        params=params,
        mode=args.mode,
        result={"order": str(got), "closed_form": str(closed), "agree": agree},
        warnings=warnings,
    )
    text = [head, f"closed form ({branch}): {closed}", "gcd route and closed form " + ("agree" if agree else "DIFFER")]
    text.extend(warnings)
    tsv_header = "kind\tm\tn\tmode\torder\tclosed_form\tagree"
    tsv_row = "\t".join([kind, params.get("m", ""), str(args.n), args.mode, str(got), str(closed), str(agree).lower()])
    _emit(res, args.format, text, [tsv_header, tsv_row])
    return 0


def _cmd_gauge(args: argparse.Namespace) -> int:
    sub: str = args.sub
    if not 1 <= args.m < args.n:
        raise _UsageError("gauge commands require 1 <= m < n")
    m, n = args.m, args.n
    d = gauge_modulus(m, n)
    params: dict[str, str] = {"sub": sub, "m": str(m), "n": str(n)}
    warnings: list[str] = []

    if sub == "invariant":
        if args.k is None:
            raise _UsageError("invariant requires --k")
        params["k"] = str(args.k)
        inv = gauge_invariant(m, n, args.k)
        result: Any = {"invariant": str(inv), "modulus": str(d)}
        text = [f"{inv} (D={d})"]
        tsv = ["m\tn\tk\tinvariant\tmodulus", f"{m}\t{n}\t{args.k}\t{inv}\t{d}"]
    elif sub == "compare":
        if args.k is None or args.kprime is None:
            raise _UsageError("compare requires --k and --kprime")
        params["k"] = str(args.k)
        params["kprime"] = str(args.kprime)
        inv_k = gauge_invariant(m, n, args.k)
        inv_kp = gauge_invariant(m, n, args.kprime)
        equal = gauge_necessary_equiv(m, n, args.k, args.kprime)
        if equal:
            warnings.append("necessary condition only: true does not certify a homotopy equivalence")
        result = {
            "equal": equal,
            "invariant_k": str(inv_k),
            "invariant_kprime": str(inv_kp),
            "modulus": str(d),
        }
        rel = "=" if equal else "≠"
        text = [f"{str(equal).lower()} (inv {inv_k} {rel} inv {inv_kp}, D={d})"]
        text.extend(warnings)
        tsv = [
            "m\tn\tk\tkprime\tinvariant_k\tinvariant_kprime\tequal\tmodulus",
            f"{m}\t{n}\t{args.k}\t{args.kprime}\t{inv_k}\t{inv_kp}\t{str(equal).lower()}\t{d}",
        ]
    elif sub == "classes":
        classes = count_invariant_classes(m, n)
        result = {"classes": str(classes), "modulus": str(d)}
        text = [f"{classes}"]
        if d <= _DIVISOR_LIST_LIMIT:
            divs = modulus_divisors(m, n)
            result["divisors"] = [str(v) for v in divs]
            text.append(f"divisors of D={d}: " + " ".join(str(v) for v in divs))
        else:
            warnings.append(f"divisor list suppressed (D={d} exceeds {_DIVISOR_LIST_LIMIT})")
            text.extend(warnings)
        tsv = ["m\tn\tmodulus\tclasses", f"{m}\t{n}\t{d}\t{classes}"]
    else:  # modulus
        t = GaugeParams(m, n, 0).t
        result = {"modulus": str(d), "t": str(t), "branch": _branch_label(m, n)}
        text = [f"{d}"]
        tsv = ["m\tn\tmodulus\tt\tbranch", f"{m}\t{n}\t{d}\t{t}\t{_branch_label(m, n)}"]

    res = CommandResult(command="gauge", params=params, mode=args.mode, result=result, warnings=warnings)
    _emit(res, args.format, text, tsv)
    return 0


def _parse_range(text: str, flag: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_v = int(lo)
        hi_v = int(hi) if sep else lo_v
    except ValueError:
        raise _UsageError(f"--{flag} expects INT or INT..INT, got {text!r}") from None
    if hi_v < lo_v:
        raise _UsageError(f"--{flag} range {text!r} is empty")
    return range(lo_v, hi_v + 1)


def _cmd_table(args: argparse.Namespace) -> int:
    mode = _MODE_FLAGS[args.mode]
    m_range = _parse_range(args.m, "m")
    n_range = _parse_range(args.n, "n")
    cells = [(m, n) for m in m_range for n in n_range if 1 <= m < n]
    if not cells:
        raise _UsageError("empty table: no (m, n) with 1 <= m < n in the given ranges")
    rows = []
    for m, n in cells:
        rows.append(
            {
                "m": str(m),
                "n": str(n),
                "samelson": str(samelson_order(m, n, mode).order),
                "modulus": str(gauge_modulus(m, n)),
                "classes": str(count_invariant_classes(m, n)),
                "branch": _branch_label(m, n),
            }
        )
    res = CommandResult(
        command="table",
        params={"m": args.m, "n": args.n},
        mode=args.mode,
        result=rows,
    )
    columns = ["m", "n", "samelson", "modulus", "classes", "branch"]
    header = "\t".join(columns)
    tsv = [header] + ["\t".join(row[c] for c in columns) for row in rows]
    text = [" ".join(columns)] + [" ".join(row[c] for c in columns) for row in rows]
    _emit(res, args.format, text, tsv)
    return 0


def _verify_payload(report: VerifyReport) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    a_pass, a_total = report.series_tally("a")
    b_pass, b_total = report.series_tally("b")
    result = {
        "a_passed": str(a_pass),
        "a_total": str(a_total),
        "b_passed": str(b_pass),
        "b_total": str(b_total),
        "all_pass": report.all_passed,
        "discrepancies": [
            {"where": disc.where, "stated": disc.stated, "recomputed": disc.recomputed}
            for disc in report.discrepancies
        ],
    }
    checks = [
        {
            "series": c.series,
            "name": c.name,
            "params": {key: str(value) for key, value in c.params},
            "expected": str(c.expected),
            "actual": str(c.actual),
            "mode": c.mode,
            "pass": c.passed,
        }
        for c in report.checks
    ]
    return result, checks


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 2:
        raise _UsageError("verify requires --max-n >= 2")
    report = discrepancy_report(args.max_n)
    result, checks = _verify_payload(report)
    res = CommandResult(
        command="verify",
        params={"max_n": str(args.max_n)},
        mode=args.mode,
        result=result,
        checks=checks,
    )

    a_pass, a_total = report.series_tally("a")
    b_pass, b_total = report.series_tally("b")
    text = [
        f"checks over 1 <= m < n <= {args.max_n}",
        f"(a) {a_pass}/{a_total} pass, (b) {b_pass}/{b_total} pass",
        f"discrepancies recorded (stated vs recomputed; data, not failures): {len(report.discrepancies)}",
    ]
    shown = report.discrepancies[:_TEXT_DISCREPANCY_LIMIT]
    text.extend(f"  {d.where}: stated {d.stated}, recomputed {d.recomputed}" for d in shown)
    hidden = len(report.discrepancies) - len(shown)
    if hidden > 0:
        text.append(f"  ... and {hidden} more (use --format json for the full list)")
    failures = [c for c in report.checks if not c.passed]
    text.append("ok" if not failures else f"FAIL: {len(failures)} check(s) disagree")

    tsv = ["row\tseries\tname\tparams\texpected\tactual\tmode\tpass"]
    for c in report.checks:
        param_str = " ".join(f"{key}={value}" for key, value in c.params)
        tsv.append(f"check\t{c.series}\t{c.name}\t{param_str}\t{c.expected}\t{c.actual}\t{c.mode}\t{str(c.passed).lower()}")
    for disc in report.discrepancies:
        tsv.append(f"discrepancy\t\t{disc.where}\t\t{disc.stated}\t{disc.recomputed}\t\t")

    _emit(res, args.format, text, tsv)
    return 0 if report.all_passed else 1


_DISPATCH = {"order": _cmd_order, "gauge": _cmd_gauge, "table": _cmd_table, "verify": _cmd_verify}


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"spgauge: error: {exc}", file=sys.stderr)
        return 2
    except (LiteralFormulaError, NonIntegralOrderError, ValueError) as exc:
        # parameter combinations the requested mode cannot serve
        print(f"spgauge: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
