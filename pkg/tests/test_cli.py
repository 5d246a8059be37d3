import json
import subprocess
import sys

import pytest

from krull.cli import run
from krull.ideals import parse_ideal
from krull.poly import parse_poly
from krull.rings import RingDescriptor


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


@pytest.mark.parametrize("argv,expected", [
    (["classify", "--ring", "ZZ", "--ideal", "(5, x^2+2)"], "MAXIMAL height=2 chain=(0)⊂(5)⊂(5, x^2+2)"),
    (["dim", "--ring", "ZZ"], "2"),
    (["dim", "--ring", "QQ"], "1"),
    (["irreducibles", "--ring", "ZZ[i]", "--count", "3"], "1+i, 1+2i, 2+i"),
    (["irreducibles", "--ring", "Zloc(3)", "--count", "4"], "3"),
    (["irreducibles", "--ring", "GF(2)[t]", "--count", "3"], "[t], [t+1], [t^2+t+1]"),
    (["pseudo-div", "--ring", "ZZ", "--f", "x^2+1", "--g", "2x+1"], "a=4 q=2*x-1 r=5"),
    (["member", "--ring", "ZZ", "--ideal", "(2, x)", "--poly", "6x+3"], "false"),
    (["member", "--ring", "ZZ", "--ideal", "(5, x^2+2)", "--poly", "x^4+4x^2+4"], "true"),
    (["jacobson", "--ring", "ZZ", "--poly", "6x+3"], "(2, x)"),
    (["jacobson", "--ring", "Zloc(2)", "--poly", "4x-2"], "(2*x^2-1)"),
    (["classify", "--ring", "Zloc(2)", "--ideal", "(2x-1)"], "MAXIMAL height=1 chain=(0)⊂(2*x-1)"),
    (["classify", "--ring", "ZZ", "--ideal", "(2, x^2+1)"], "NOT_PRIME reason=x^2+1 is reducible modulo 2"),
])
def test_golden_outputs(capsys, argv, expected):
    code, out, err = call(capsys, *argv)
    assert (code, out, err) == (0, expected, "")


def test_json_output(capsys):
    code, out, _ = call(capsys, "classify", "--ring", "ZZ", "--ideal", "(5, x^2+2)", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "MAXIMAL" and doc["height"] == 2
    assert doc["chain"] == ["(0)", "(5)", "(5, x^2+2)"]


@pytest.mark.parametrize("argv,needle", [
    (["classify", "--ring", "ZZ", "--ideal", "(2, x, 3)"], "UnsupportedShapeError"),
    (["classify", "--ring", "ZZ", "--ideal", "(4, x)"], "NotIrreducibleError"),
    (["pseudo-div", "--ring", "ZZ", "--f", "x", "--g", "0"], "DivisionByZeroError"),
    (["member", "--ring", "ZZ", "--ideal", "(x)", "--poly", "x^"], "ParseError"),
    (["jacobson", "--ring", "ZZ", "--poly", "0"], "ZeroPolynomialError"),
])
def test_domain_errors_exit_1(capsys, argv, needle):
    code, out, err = call(capsys, *argv)
    assert code == 1 and out == ""
    assert needle in err and err.startswith(f"krull {argv[0]}:")


@pytest.mark.parametrize("argv", [
    [], ["dim"], ["dim", "--ring", "GF(4)[t]"], ["dim", "--ring", "RR"], ["frobnicate"],
    ["irreducibles", "--ring", "ZZ", "--count", "0"], ["dim", "--ring", "ZZ", "--format", "xml"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("ring,ideal", [
    ("ZZ", "(5, x^2+2)"), ("ZZ[i]", "(1+i, x^2+x+1)"), ("GF(3)[t]", "([t+2]*x^2+[1])"),
    ("Zloc(5)", "(5*x-1)"), ("QQ", "(x^3-1/2)"),
])
def test_printed_values_round_trip(capsys, ring, ideal):
    R = RingDescriptor.parse(ring)
    code, out, _ = call(capsys, "classify", "--ring", ring, "--ideal", ideal, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    for text in [doc["ideal"], *doc["chain"]]:
        assert str(parse_ideal(R, text)) == text
    code, out, _ = call(capsys, "pseudo-div", "--ring", ring, "--f", "x^3+x", "--g", "x+1", "--format", "json")
    for key in ("q", "r"):
        assert str(parse_poly(R, json.loads(out)[key])) == json.loads(out)[key]


def test_capacity_env(monkeypatch, capsys):
    monkeypatch.setenv("KRULL_CAPACITY", "degree=2")
    code, _, err = call(capsys, "classify", "--ring", "ZZ", "--ideal", "(5, x^3+x+1)")
    assert code == 1 and "CapacityError" in err
    monkeypatch.setenv("KRULL_CAPACITY", "degree=lots")
    code, _, err = call(capsys, "dim", "--ring", "ZZ")
    assert code == 0
    code, _, err = call(capsys, "classify", "--ring", "ZZ", "--ideal", "(5, x^3+x+1)")
    assert code == 1 and "KRULL_CAPACITY" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "krull", "dim", "--ring", "Zloc(7)"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "2\n"
