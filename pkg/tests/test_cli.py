"""Command-line surface: output shapes, formats, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from spgauge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_order_samelson_text(capsys):
    code, out, _ = run(capsys, "order", "samelson", "--m", "1", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "samelson order, m=1 n=2: 40"
    assert lines[1].endswith(": 40")
    assert lines[2] == "gcd route and closed form agree"


def test_order_q2_text(capsys):
    code, out, _ = run(capsys, "order", "q2-group", "--n", "3")
    assert code == 0
    assert out.splitlines()[0] == "q2-group order, n=3: 840"


def test_order_modes_agree(capsys):
    baseline = run(capsys, "order", "samelson", "--m", "1", "--n", "2")[1]
    conv = run(capsys, "order", "samelson", "--m", "1", "--n", "2", "--mode", "convolution")[1]
    assert baseline.splitlines()[0] == conv.splitlines()[0]


def test_order_paper_mode_small_gap(capsys):
    # the literal formulas cover n - m <= 2; beyond that the mode must refuse
    code, out, _ = run(capsys, "order", "samelson", "--m", "1", "--n", "3", "--mode", "paper")
    assert code == 0
    assert out.splitlines()[0] == "samelson order, m=1 n=3: 84"
    code, _, err = run(capsys, "order", "samelson", "--m", "1", "--n", "4", "--mode", "paper")
    assert code == 2
    assert "error" in err


def test_gauge_invariant_text(capsys):
    code, out, _ = run(capsys, "gauge", "invariant", "--m", "1", "--n", "2", "--k", "7")
    assert code == 0
    assert out == "1 (D=40)\n"


def test_gauge_compare_text(capsys):
    code, out, _ = run(capsys, "gauge", "compare", "--m", "1", "--n", "2", "--k", "1", "--kprime", "2")
    assert code == 0
    assert out.splitlines()[0] == "false (inv 1 ≠ inv 2, D=40)"

    code, out, _ = run(capsys, "gauge", "compare", "--m", "1", "--n", "2", "--k", "3", "--kprime", "7")
    assert code == 0
    assert out.splitlines()[0] == "true (inv 1 = inv 1, D=40)"


def test_gauge_classes_text(capsys):
    code, out, _ = run(capsys, "gauge", "classes", "--m", "1", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "8"
    assert lines[1] == "divisors of D=40: 1 2 4 5 8 10 20 40"


def test_gauge_modulus_json(capsys):
    code, out, _ = run(capsys, "gauge", "modulus", "--m", "2", "--n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "gauge"
    assert doc["params"] == {"sub": "modulus", "m": "2", "n": "3"}
    assert doc["result"]["modulus"] == "840"
    assert doc["result"]["branch"] == "t"
    assert doc["warnings"] == []


def test_json_integers_are_decimal_strings(capsys):
    # orders exceed 2^64 fast; every numeric field must be a string
    _, out, _ = run(capsys, "order", "samelson", "--m", "10", "--n", "12", "--format", "json")
    doc = json.loads(out)
    assert isinstance(doc["result"]["order"], str)
    assert doc["result"]["order"].isdigit()
    assert int(doc["result"]["order"]) > 2**64


def test_table_text_and_tsv(capsys):
    code, out, _ = run(capsys, "table", "--m", "1", "--n", "2..3")
    assert code == 0
    assert out.splitlines() == [
        "m n samelson modulus classes branch",
        "1 2 40 40 8 2t",
        "1 3 84 84 12 2t",
    ]

    code, out, _ = run(capsys, "table", "--m", "1..2", "--n", "2..3", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == [
        "m\tn\tsamelson\tmodulus\tclasses\tbranch",
        "1\t2\t40\t40\t8\t2t",
        "1\t3\t84\t84\t12\t2t",
        "2\t3\t840\t840\t32\tt",
    ]
    assert "\r" not in out


def test_table_json_rows(capsys):
    _, out, _ = run(capsys, "table", "--m", "1", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["result"] == [
        {"m": "1", "n": "2", "samelson": "40", "modulus": "40", "classes": "8", "branch": "2t"}
    ]


def test_verify_text_and_exit(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "(a) 45/45 pass, (b) 9/9 pass"
    assert lines[-1] == "ok"


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "params", "mode", "result", "warnings", "checks"}
    assert doc["result"]["a_passed"] == doc["result"]["a_total"] == "3"
    assert doc["result"]["all_pass"] is True
    check = doc["checks"][0]
    assert set(check) == {"series", "name", "params", "expected", "actual", "mode", "pass"}
    assert check["pass"] is True
    assert check["expected"].isdigit()


def test_order_tsv(capsys):
    code, out, _ = run(capsys, "order", "q2-group", "--n", "2", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == [
        "kind\tm\tn\tmode\torder\tclosed_form\tagree",
        "q2-group\t\t2\tclosed\t40\t40\ttrue",
    ]


def test_verify_tsv(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "row\tseries\tname\tparams\texpected\tactual\tmode\tpass"
    assert lines[1].startswith("check\ta\t")
    assert "\tm=1 n=2\t" in lines[1]
    assert any(line.startswith("discrepancy\t") for line in lines)


def test_classes_suppresses_huge_divisor_list(capsys):
    code, out, _ = run(capsys, "gauge", "classes", "--m", "11", "--n", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].isdigit()
    assert "divisor list suppressed" in lines[1]


def test_verify_deterministic_bytes(capsys):
    first = run(capsys, "verify", "--max-n", "4", "--format", "json")[1]
    second = run(capsys, "verify", "--max-n", "4", "--format", "json")[1]
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ("order", "samelson", "--m", "2", "--n", "2"),
        ("order", "samelson", "--n", "2"),
        ("order", "q2-group", "--n", "1"),
        ("gauge", "invariant", "--m", "1", "--n", "2"),
        ("gauge", "compare", "--m", "1", "--n", "2", "--k", "1"),
        ("gauge", "invariant", "--m", "0", "--n", "2", "--k", "1"),
        ("table", "--m", "5", "--n", "2..4"),
        ("table", "--m", "x", "--n", "2"),
        ("table", "--m", "3..1", "--n", "2"),
        ("verify", "--max-n", "1"),
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("spgauge: error:")


def test_argparse_rejects_unknown(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["order", "nonsense", "--n", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--bogus"])
    assert exc.value.code == 2


def test_warning_on_ignored_m(capsys):
    _, out, _ = run(capsys, "order", "q2-group", "--n", "2", "--m", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["warnings"] == ["--m is ignored for q2-group"]
