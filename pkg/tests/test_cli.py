import json
import math
import subprocess
import sys

import pytest

from torsion8 import cli

R2 = math.sqrt(2)


def flat(value):
    if isinstance(value, (list, tuple)):
        return [v for item in value for v in flat(item)]
    return [value]


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return json.loads(out), code, out


def test_example_passes(capsys):
    report, code, _ = run(["example"], capsys)
    assert code == 0 and report["passed"]
    assert report["x_P"] == pytest.approx([0.4142135624, -0.9101797211], abs=1e-10)
    assert report["beta"] == pytest.approx([1.4142135624, 0], abs=1e-10)
    assert report["verified_order"] == 8
    assert report["multiples"][7]["point"] == "infinity"
    assert len(report["multiples"]) == 8
    assert flat(report["four_P"]) == pytest.approx([0, 0, 0, 0], abs=1e-10)
    assert report["two_P_x"] == pytest.approx([-1, 0], abs=1e-10)


def test_example_is_byte_identical(capsys):
    outputs = {run(["example"], capsys)[2] for _ in range(3)}
    assert len(outputs) == 1


def test_example_detects_perturbed_golden():
    golden = dict(cli.GOLDEN)
    re, im = golden["x_P"]
    golden["x_P"] = (repr(float(re) + 1e-6), im)
    report, code = cli.cmd_example(golden)
    assert code == 1 and not report["checks"]["x_P"]["pass"]


def test_float_format():
    assert cli.dumps(0.1) == "0.10000000000000001"
    assert cli.dumps(-0.0) == "0"
    assert cli.dumps({"b": 1, "a": [1.5, None, True]}) == '{"a": [1.5, null, true], "b": 1}'
    with pytest.raises(ValueError):
        cli.dumps(float("nan"))


@pytest.mark.parametrize(
    "text, value",
    [("i", 1j), ("-i", -1j), ("2", 2), ("3i", 3j), ("1+2i", 1 + 2j), ("1-2i", 1 - 2j),
     (" -0.5 + 1e-3i ", -0.5 + 1e-3j), ([1, -2], 1 - 2j), (4, 4)],
)
def test_parse_complex(text, value):
    assert cli.parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "x", "1+", "2j", [1], "1++i"])
def test_parse_complex_rejects(text):
    with pytest.raises(cli.ParseError):
        cli.parse_complex(text)


def test_parse_roots_forms():
    assert cli.parse_roots("i,0,-i") == (1j, 0, -1j)
    assert cli.parse_roots("[[0,1],[0,0],[0,-1]]") == (1j, 0, -1j)
    with pytest.raises(cli.ParseError):
        cli.parse_roots("1,2")


def test_torsion_example(capsys):
    report, code, _ = run(["torsion", "--roots", "i,0,-i", "--order", "8"], capsys)
    assert code == 0
    assert report["order8"]["verified_order"] == 8
    assert report["order8"]["point"][0] == pytest.approx([0.4142135624, -0.9101797211], abs=1e-10)


def test_torsion_all(capsys):
    report, code, _ = run(["torsion", "--roots", "3,1,0", "--order", "all"], capsys)
    assert code == 0 and report["passed"]
    assert [r["group_law_order"] for r in report["order2"]] == [2, 2, 2]
    assert [r["oracle_order"] for r in report["order4"]] == [4, 4, 4, 4]
    assert report["order8"]["verified_order"] == 8


def test_torsion_degenerate(capsys):
    report, code, _ = run(["torsion", "--roots", "1,1,0"], capsys)
    assert code == 2 and report["error"]["type"] == "DegenerateCurve"


def test_torsion_branch_minus(capsys):
    plus, _, _ = run(["torsion", "--roots", "i,0,-i"], capsys)
    minus, code, _ = run(["torsion", "--roots", "i,0,-i", "--branch", "-"], capsys)
    assert code == 0 and minus["branch"] == "-"
    assert minus["order8"]["point"][1] == pytest.approx(
        [-v for v in plus["order8"]["point"][1]], abs=1e-15
    )


def test_permute_roots(capsys):
    report, code, _ = run(["torsion", "--roots", "0,3,1", "--permute-roots"], capsys)
    # (0, 1, 3) also has real beta > 1 but its point is not of order 8
    assert report["beta_permutations"] == [[0, 2, 1], [1, 2, 0]]
    assert code == 0 and report["permutation"] == [1, 2, 0]
    assert report["roots"] == [[3, 0], [1, 0], [0, 0]]
    assert report["beta_assumption_met"]


def test_without_permutation_outside_assumption(capsys):
    report, code, _ = run(["torsion", "--roots", "0,3,1"], capsys)
    assert code == 1 and not report["beta_assumption_met"]
    assert "permutation" not in report


def test_mul(capsys):
    report, code, _ = run(["mul", "--roots", "i,0,-i", "-k", "4", "--order8-point"], capsys)
    assert code == 0
    assert flat(report["result"]) == pytest.approx([0, 0, 0, 0], abs=1e-10)
    report, _, _ = run(["mul", "--roots", "i,0,-i", "-k", "2", "--order8-point"], capsys)
    (x, y) = report["result"]
    assert x == pytest.approx([-1, 0], abs=1e-10)
    assert math.hypot(*y) == pytest.approx(2 * R2, abs=1e-10)
    report, _, _ = run(["mul", "--roots", "i,0,-i", "-k", "0", "--x", "1"], capsys)
    assert report["result"] == "infinity"


def test_mul_with_order(capsys):
    report, code, _ = run(
        ["mul", "--roots", "i,0,-i", "-k", "3", "--x", "1", "--with-order"], capsys
    )
    assert code == 0 and report["group_law_order"] == report["oracle_order"] == 4


def test_mul_off_curve(capsys):
    report, code, _ = run(["mul", "--roots", "i,0,-i", "-k", "2", "--point", "1,2"], capsys)
    assert code == 3 and report["error"]["type"] == "OffCurve"


@pytest.mark.parametrize(
    "argv",
    [
        ["mul", "--roots", "i,0,-i", "-k", "2"],
        ["mul", "--roots", "i,0,-i", "-k", "-1", "--x", "1"],
        ["torsion", "--roots", "1,x,0"],
        ["torsion"],
        ["frobnicate"],
        ["torsion", "--roots", "i,0,-i", "--branch", "?"],
    ],
)
def test_parse_errors(argv, capsys):
    report, code, _ = run(argv, capsys)
    assert code == 4 and report["error"]["type"] == "ParseError"


def test_order(capsys):
    report, code, _ = run(["order", "--roots", "i,0,-i", "--x", "0"], capsys)
    assert code == 0 and report["group_law_order"] == report["oracle_order"] == 2
    assert [p["n"] for p in report["profile"] if p["vanishes"]] == list(range(2, 17, 2))


def test_normalize(capsys):
    report, code, _ = run(["normalize", "--roots", "i,0,-i"], capsys)
    assert code == 0
    assert report["A"] == [1, 0] and report["B"] == [0, 0] and report["shift"] == [0, 0]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "torsion8", "torsion", "--roots", "1,1,0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert json.loads(proc.stdout)["error"]["exit_code"] == 2
    assert "DegenerateCurve" in proc.stderr
