import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigcocycle.cli import run
from sigcocycle.cli.parser import (Gen, Group, Iota, Psi, Term, format_expr, format_word,
                                   parse_expr, parse_word)
from sigcocycle.cli.report import approx, format_rational
from sigcocycle.errors import ParseError
from sigcocycle.words import Word, bscc_word, iota_word, random_word


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def cli_json(*argv):
    code, out, err = cli(*argv, "--json")
    assert code == 0, err
    return [json.loads(line) for line in out.splitlines()]


# -- parser ----------------------------------------------------------------

def test_parse_examples():
    assert parse_word("z1 z2^-1", 2) == Word.from_indices(2, [1, -2])
    assert parse_word("(z1 z2)^3", 2) == Word.from_indices(2, [1, 2] * 3)
    assert parse_word("(z1 z2)^-1", 2) == Word.from_indices(2, [-2, -1])
    assert parse_word("iota", 1) == iota_word(1)
    assert parse_word("psi 1", 2) == parse_word("psi1", 2) == bscc_word(2, 1)
    assert parse_word("z1^−2", 1) == Word.from_indices(1, [-1, -1])


@pytest.mark.parametrize("text", ["", "z", "z1^0", "(z1", "z1)", "q1", "z1 ^", "z1 $"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_word(text, 2)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_expr("z1 z2 $")
    assert exc.value.position == 6


exponents = st.integers(-3, 3).filter(lambda e: e != 0)
atoms = st.one_of(st.builds(Gen, st.integers(1, 7)), st.just(Iota()),
                  st.builds(Psi, st.integers(1, 2)))
terms = st.recursive(
    st.builds(Term, atoms, exponents),
    lambda inner: st.builds(Term, st.lists(inner, min_size=1, max_size=3)
                            .map(lambda ts: Group(tuple(ts))), exponents),
    max_leaves=6)


@given(st.lists(terms, min_size=1, max_size=4).map(tuple))
def test_format_parse_round_trip(expr):
    assert parse_expr(format_expr(expr)) == expr


@given(st.integers(0, 10**6))
def test_format_word_round_trip(seed):
    w = random_word(3, 10, seed)
    if len(w):
        assert parse_word(format_word(w), 3) == w


def test_format_rational():
    from fractions import Fraction
    assert format_rational(Fraction(-4, 5)) == "-4/5"
    assert format_rational(Fraction(6, 3)) == "2"
    assert approx(Fraction(2, 3)).startswith("0.6666")


# -- subcommands -----------------------------------------------------------

def test_phi():
    [r] = cli_json("phi", "--genus", "2", "--word", "psi 1")
    assert r["value"] == "-4/5"
    assert list(r) == ["invariant", "input", "value", "method", "warnings", "details"]
    [r] = cli_json("phi", "--genus", "2", "--word", "z3")
    assert r["value"] == "3/5"


def test_tau():
    [r] = cli_json("tau", "--genus", "1", "--word", "z1^-1 z2^-1 z1^-1",
                   "--word2", "z1^-1 z2^-1 z1^-1")
    assert r["value"] == "-2"
    assert r["details"]["negative"] == 2


def test_eta():
    [r] = cli_json("eta", "--genus", "1", "--word", "z1^-1 z2^-1 z1^-1")
    assert r["value"] == "-1" and r["details"]["order"] == 4
    [r] = cli_json("eta", "--genus", "3", "--word", "iota")
    assert r["value"] == "0"


def test_rho():
    [r] = cli_json("rho", "--genus", "1", "--word", "z1^3")
    assert r["value"] == "-1"
    [r] = cli_json("rho", "--genus", "2", "--word", "psi 1", "--limit", "4", "--window", "3")
    assert r["value"] == "0" and r["method"] == "torelli-power-closed-form"
    [r] = cli_json("rho", "--genus", "1", "--word", "z1^-1 z2^-1")
    assert r["value"] == "4/3"


def test_d0_and_classify():
    [r] = cli_json("d0", "--genus", "3", "--word", "psi 1")
    assert r["value"] == "-24/7" and r["details"]["closed_form"] == "-24/7"
    assert r["warnings"]
    [r] = cli_json("classify", "--genus", "1", "--word", "z1 z2^-1")
    assert r["value"] == "hyperbolic"


def test_decimal_flag():
    [r] = cli_json("phi", "--genus", "2", "--word", "z1", "--decimal")
    assert r["value_approx"].endswith("(approx)")
    code, out, _ = cli("phi", "--genus", "2", "--word", "z1")
    assert code == 0 and "3/5" in out


def test_matrix_documents(tmp_path):
    good = tmp_path / "a4.json"
    good.write_text(json.dumps({"genus": 1, "entries": [[0, -1], [1, 0]]}))
    [r] = cli_json("phi", "--matrix", str(good))
    assert r["value"] == "-1"
    [r] = cli_json("rho", "--matrix", str(good))
    assert r["value"] == "1"
    [r] = cli_json("eta", "--matrix", str(good))
    assert r["value"] == "-1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"genus": 1, "entries": [[2, 0], [0, 2]]}))
    assert cli("phi", "--matrix", str(bad))[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert cli("phi", "--matrix", str(broken))[0] == 2
    assert cli("phi", "--matrix", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize("argv, code", [
    (["phi", "--genus", "2", "--word", "z9"], 2),
    (["phi", "--genus", "2", "--word", "z1^0"], 2),
    (["phi", "--word", "z1"], 2),
    (["nonsense"], 2),
    (["eta", "--genus", "1", "--word", "z1 z2^-1"], 1),
    (["d0", "--genus", "2", "--word", "z1"], 1),
    (["classify", "--genus", "2", "--word", "z1"], 2),
    (["phi", "--genus", "2", "--word", "z1", "--j-sign", "-1"], 3),
    (["verify", "--genus", "1", "--cases", "2", "--j-sign", "-1"], 3),
])
def test_exit_codes(argv, code):
    assert cli(*argv)[0] == code


def test_verify_command():
    reports = cli_json("verify", "--genus", "2", "--cases", "3", "--seed", "5")
    assert reports and all(r["value"] == "pass" for r in reports)


def test_json_is_deterministic():
    argv = ("verify", "--genus", "1", "--cases", "4", "--seed", "9")
    assert cli(*argv, "--json")[1] == cli(*argv, "--json")[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sigcocycle", "phi", "--genus", "2",
                           "--word", "psi 1", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == "-4/5"
