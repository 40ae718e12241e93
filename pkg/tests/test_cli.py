import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import algebras, polys
from reesalg.cli import Divisor, ProblemFile, ProblemParseError, main, parse_problem

CUSP = "vars x y;\npair gens: x^2+y^3; b: 2;\n"
CUSP2 = "vars x y;\npair gens: x^4 + 2*x^2*y^3 + y^6; b: 4;\n"


def run(tmp_path, *args, files=None):
    paths = []
    for i, text in enumerate(files or []):
        p = tmp_path / f"in{i}.txt"
        p.write_text(text)
        paths.append(str(p))
    out = io.StringIO()
    code = main([args[0], *paths, *args[1:]], out=out)
    return code, out.getvalue()


def test_parse_pair_and_algebra():
    p = parse_problem(CUSP)
    assert p.kind == "pair" and p.b == 2 and p.names == ("x", "y")
    q = parse_problem("vars x y;\nalgebra gens: (x^2+y^3, 2), (x*y, 1);\ndivisors: x[a=1/2, D], y[a=0];\npoints: (0,0), (1,-1);\n")
    assert [n for _, n in q.gens] == [2, 1]
    assert q.divisors == (Divisor(0, Fraction(1, 2), True), Divisor(1, Fraction(0), False))
    assert q.points == ((0, 0), (1, -1))


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("vars x y;\npair gens: x^2 + z; b: 2;\n", 2, 18),
        ("vars x y;\npair gens: x^2; b: 0;\n", 2, 20),
        ("vars x y;\nalgebra gens: (x, 2), (y);\n", 2, 23),
        ("vars x y;\npair gens: x^2; b: 2", 2, 21),
        ("pair gens: x; b: 1;", 1, 1),
        ("vars x y;\npair gens: x; b: 1;\ndivisors: w[a=1];\n", 3, 11),
        ("vars x y;\npair gens: x; b: 1;\npoints: (0, 1, 2);\n", 3, 9),
        ("vars x y;\nfoo: 1;\n", 2, 1),
    ],
)
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(ProblemParseError) as e:
        parse_problem(text)
    assert (e.value.line, e.value.column) == (line, col)


def test_comments_are_ignored():
    p = parse_problem("# cusp\nvars x y; # two variables\npair gens: x^2+y^3; b: 2;\n")
    assert p == parse_problem(CUSP)


def test_ord_command(tmp_path):
    assert run(tmp_path, "ord", "--point", "0,0", files=[CUSP]) == (0, "1\n")
    assert run(tmp_path, "ord", "--point", "1/2,0", files=["vars x y;\nalgebra gens: (x^3, 2);\n"])[1] == "0\n"


def test_resolve_command(tmp_path):
    code, out = run(tmp_path, "resolve", files=[CUSP])
    assert code == 0
    d = json.loads(out)
    assert d["outcome"] == "resolved"
    assert sum(1 for s in d["steps"] if s["kind"] == "blowup") == 1


def test_check_equiv(tmp_path):
    code, out = run(tmp_path, "check-equiv", files=[CUSP, CUSP2])
    assert (code, out) == (0, "EQUIVALENT: traces identical (1 step)\n")
    code, out = run(tmp_path, "check-equiv", files=[CUSP, "vars x y;\npair gens: x^2+y^5; b: 2;\n"])
    assert code == 1 and out.startswith("NOT EQUIVALENT")


def test_exit_codes(tmp_path):
    assert run(tmp_path, "resolve", files=["vars x y;\npair gens: x^2+; b: 2;\n"])[0] == 2
    assert run(tmp_path, "resolve", "--max-steps", "2", files=["vars x y;\npair gens: x^2-y^2; b: 1;\n"])[0] == 3
    # declared exponent disagrees with the algebra
    assert run(tmp_path, "resolve", files=["vars x y;\npair gens: x^2*y; b: 1;\ndivisors: x[a=1];\n"])[0] == 1


def test_other_commands(tmp_path):
    code, out = run(tmp_path, "diffclose", files=[CUSP])
    assert out.splitlines() == ["(y^3 + x^2, 2)", "(y^3 + x^2, 1)", "(2*x, 1)", "(3*y^2, 1)"]
    code, out = run(tmp_path, "transform", "--center", "x,y", files=[CUSP])
    assert code == 0 and "chart 0/y: {(x^2 + y, 2)}" in out
    assert run(tmp_path, "transform", "--center", "y", files=[CUSP])[0] == 1
    code, out = run(tmp_path, "sing", files=[CUSP])
    assert code == 0 and "max t: (1, 0)" in out


def test_dump_roundtrip(tmp_path):
    text = "vars x y;\nalgebra gens: (x^2 - 1/2*y^2, 1), (x*y,3);\ndivisors: y[D], x[a=0];\npoints: (1/2,-1);\n"
    code, dumped = run(tmp_path, "resolve", "--dump", files=[text])
    assert code == 0
    assert parse_problem(dumped) == parse_problem(text)
    assert run(tmp_path, "resolve", "--dump", files=[dumped])[1] == dumped


@settings(max_examples=50)
@given(algebras(d=2), st.booleans(), st.lists(st.tuples(st.fractions(max_denominator=4), st.fractions(max_denominator=4)), max_size=2))
def test_roundtrip_property(G, as_pair, pts):
    if as_pair:
        b = G.gens[0][1]
        prob = ProblemFile(("x", "y"), "pair", tuple((f, b) for f, _ in G.gens), b, (Divisor(1, None, True),), tuple(pts))
    else:
        prob = ProblemFile(("x", "y"), "algebra", G.gens, None, (), tuple(pts))
    assert parse_problem(prob.to_text()) == prob


def test_console_script_runs(tmp_path):
    p = tmp_path / "cusp.pair"
    p.write_text(CUSP)
    r = subprocess.run([sys.executable, "-m", "reesalg.cli", "ord", str(p)], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "1\n"
