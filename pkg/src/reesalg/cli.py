"""Command-line front end for problem files and the resolution driver.

Problem file grammar (statements end with ``;``, ``#`` starts a comment)::

    vars x y;
    pair gens: x^2 + y^3; b: 2;          # or: algebra gens: (x^2+y^3, 2), (x*y, 1);
    divisors: x[a=1/2, D], y[a=0];        # optional
    points: (0,0), (1,-1);                # optional

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 limit exceeded, 4 unsupported geometry.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .basicobj import MarkedObject, default_candidates, max_t, max_t_exact, transform_marked, word_at
from .blowup import CenterSpec, DivisorRecord, NotPermissibleError
from .ideals import GroebnerLimitExceeded, Ideal, groebner_limits
from .polyalg import Poly, PolyParseError, parse_poly
from .rees import Pair, ReesAlgebra, diff_closure, from_pair
from .resolution import (
    LIMIT,
    RESOLVED,
    UNSUPPORTED,
    certify_leaves,
    check_monotonicity,
    resolve,
    traces_equal,
)
from .singular import ZeroAlgebraError, contains_point, default_grid, ord_at, sing_ideal

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_UNSUPPORTED = 4


# ---------------------------------------------------------------------------
# problem files


class ProblemParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Divisor:
    var: int
    a: Optional[Fraction] = None
    in_d: bool = False


@dataclass(frozen=True)
class ProblemFile:
    """A parsed problem: either a pair (gens, b) or weighted generators."""

    names: Tuple[str, ...]
    kind: str  # "pair" or "algebra"
    gens: Tuple[Tuple[Poly, int], ...]
    b: Optional[int] = None
    divisors: Tuple[Divisor, ...] = ()
    points: Tuple[Tuple[Fraction, ...], ...] = ()

    @property
    def dim(self) -> int:
        return len(self.names)

    def algebra(self) -> ReesAlgebra:
        if self.kind == "pair":
            return from_pair(Pair(Ideal(tuple(f for f, _ in self.gens), self.dim), self.b))
        return ReesAlgebra(self.gens, self.dim)

    def marked(self) -> Tuple[MarkedObject, List[str]]:
        """The root marked object and the declared exponents that disagree
        with the ones computed from the algebra."""
        recs = tuple(DivisorRecord(d.var, 0, 0, d.in_d) for d in self.divisors)
        M = MarkedObject.on_root(self.algebra(), self.names, sorted(recs, key=lambda r: r.var))
        if not recs:
            return M, []
        M = M.with_fresh_a()
        bad = []
        for d in self.divisors:
            got = M.chart.record(d.var).a
            if d.a is not None and d.a != got:
                bad.append(f"divisor {self.names[d.var]}: declared a={d.a}, computed a={got}")
        return M, bad

    def to_text(self) -> str:
        lines = ["vars " + " ".join(self.names) + ";"]
        if self.kind == "pair":
            gens = ", ".join(f.to_str(self.names) for f, _ in self.gens)
            lines.append(f"pair gens: {gens}; b: {self.b};")
        else:
            gens = ", ".join(f"({f.to_str(self.names)}, {n})" for f, n in self.gens)
            lines.append(f"algebra gens: {gens};")
        if self.divisors:
            lines.append("divisors: " + ", ".join(_divisor_text(d, self.names) for d in self.divisors) + ";")
        if self.points:
            lines.append("points: " + ", ".join(_point_text(p) for p in self.points) + ";")
        return "\n".join(lines) + "\n"


def _divisor_text(d: Divisor, names) -> str:
    opts = []
    if d.a is not None:
        opts.append(f"a={d.a}")
    if d.in_d:
        opts.append("D")
    return names[d.var] + (f"[{', '.join(opts)}]" if opts else "")


def _point_text(p) -> str:
    return "(" + ", ".join(str(c) for c in p) + ")"


class _Source:
    def __init__(self, text: str):
        self.text = text

    def error(self, msg: str, pos: int):
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        raise ProblemParseError(msg, line, col)


def _blank_comments(text: str) -> str:
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)


def _split(text: str, start: int, sep: str, src: _Source) -> List[Tuple[str, int]]:
    """Split at ``sep`` outside brackets; pieces keep their absolute offsets."""
    out, depth, begin = [], 0, start
    for i in range(start, start + len(text)):
        ch = text[i - start]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                src.error(f"unbalanced {ch!r}", i)
        elif ch == sep and depth == 0:
            out.append((text[begin - start:i - start], begin))
            begin = i + 1
    if depth:
        src.error("unclosed bracket", start + len(text))
    out.append((text[begin - start:], begin))
    return out


def _strip(piece: str, pos: int) -> Tuple[str, int]:
    lead = len(piece) - len(piece.lstrip())
    return piece.strip(), pos + lead


def _poly(text: str, pos: int, names, src: _Source) -> Poly:
    text, pos = _strip(text, pos)
    try:
        return parse_poly(text, names)
    except PolyParseError as e:
        src.error(str(e), pos + e.pos)


def _int(text: str, pos: int, src: _Source, what: str) -> int:
    text, pos = _strip(text, pos)
    if not re.fullmatch(r"\d+", text) or int(text) < 1:
        src.error(f"{what} must be a positive integer, got {text!r}", pos)
    return int(text)


def _rational(text: str, pos: int, src: _Source) -> Fraction:
    text, pos = _strip(text, pos)
    if not re.fullmatch(r"[-+]?\d+(/\d+)?", text):
        src.error(f"expected a rational number, got {text!r}", pos)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        src.error("zero denominator", pos)


def _tuple_items(text: str, pos: int, src: _Source) -> List[Tuple[str, int]]:
    text, pos = _strip(text, pos)
    if not (text.startswith("(") and text.endswith(")")):
        src.error("expected a parenthesized tuple", pos)
    return _split(text[1:-1], pos + 1, ",", src)


_KEYWORD = re.compile(r"(vars|pair|algebra|b|divisors|points)\b\s*")


def parse_problem(text: str) -> ProblemFile:
    """Parse a problem file; errors carry line and column."""
    src = _Source(text)
    clean = _blank_comments(text)
    statements = _split(clean, 0, ";", src)
    last, last_pos = statements.pop()
    if last.strip():
        src.error("missing ';'", _strip(last, last_pos)[1] + len(last.strip()))
    names: Optional[Tuple[str, ...]] = None
    kind = None
    gens: list = []
    b = None
    divisors: list = []
    points: list = []
    for body, pos in statements:
        body, pos = _strip(body, pos)
        if not body:
            continue
        m = _KEYWORD.match(body)
        if not m:
            src.error(f"unknown statement {body.split()[0]!r}", pos)
        key = m.group(1)
        rest, rpos = body[m.end():], pos + m.end()
        if key == "vars":
            if names is not None:
                src.error("variables declared twice", pos)
            found = rest.split()
            for tok in found:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9']*", tok):
                    src.error(f"bad variable name {tok!r}", rpos + rest.index(tok))
            if not found or len(set(found)) != len(found):
                src.error("expected distinct variable names", rpos)
            names = tuple(found)
            continue
        if names is None:
            src.error("'vars' must come first", pos)
        if key in ("pair", "algebra"):
            if kind is not None:
                src.error("only one pair or algebra per file", pos)
            g = re.match(r"gens\s*:", rest)
            if not g:
                src.error("expected 'gens:'", rpos)
            kind = key
            for item, ipos in _split(rest[g.end():], rpos + g.end(), ",", src):
                if key == "pair":
                    gens.append((_poly(item, ipos, names, src), 1, ipos))
                else:
                    parts = _tuple_items(item, ipos, src)
                    if len(parts) != 2:
                        src.error("expected (polynomial, weight)", _strip(item, ipos)[1])
                    gens.append((_poly(*parts[0], names, src), _int(*parts[1], src, "weight"), ipos))
            continue
        c = re.match(r":", rest)
        if not c:
            src.error("expected ':'", rpos)
        rest, rpos = rest[1:], rpos + 1
        if key == "b":
            if b is not None:
                src.error("b given twice", pos)
            b = _int(rest, rpos, src, "b")
        elif key == "divisors":
            for item, ipos in _split(rest, rpos, ",", src):
                divisors.append(_divisor(item, ipos, names, src, divisors))
        else:
            for item, ipos in _split(rest, rpos, ",", src):
                coords = [_rational(t, p, src) for t, p in _tuple_items(item, ipos, src)]
                if len(coords) != len(names):
                    src.error(f"point needs {len(names)} coordinates", _strip(item, ipos)[1])
                points.append(tuple(coords))
    end = len(text)
    if names is None:
        src.error("no 'vars' declaration", end)
    if kind is None:
        src.error("no 'pair' or 'algebra' statement", end)
    if kind == "pair" and b is None:
        src.error("a pair needs 'b:'", end)
    if kind == "algebra" and b is not None:
        src.error("'b:' only applies to pairs", end)
    for f, _, ipos in gens:
        if f.is_zero():
            src.error("generators must be nonzero", ipos)
    weight = b if kind == "pair" else None
    return ProblemFile(
        names,
        kind,
        tuple((f, weight or n) for f, n, _ in gens),
        b,
        tuple(divisors),
        tuple(points),
    )


def _divisor(item: str, pos: int, names, src: _Source, seen) -> Divisor:
    item, pos = _strip(item, pos)
    m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9']*)\s*(?:\[(.*)\])?", item, re.S)
    if not m:
        src.error(f"bad divisor {item!r}", pos)
    name = m.group(1)
    if name not in names:
        src.error(f"undeclared variable {name!r}", pos)
    var = names.index(name)
    if any(d.var == var for d in seen):
        src.error(f"divisor {name!r} declared twice", pos)
    a, in_d = None, False
    if m.group(2) is not None and m.group(2).strip():
        for opt, opos in _split(m.group(2), pos + m.start(2), ",", src):
            opt, opos = _strip(opt, opos)
            if opt == "D":
                in_d = True
            elif opt.startswith("a") and "=" in opt:
                eq = opt.index("=")
                if opt[:eq].strip() != "a":
                    src.error(f"unknown divisor option {opt!r}", opos)
                a = _rational(opt[eq + 1:], opos + eq + 1, src)
                if a < 0:
                    src.error("a must be nonnegative", opos)
            else:
                src.error(f"unknown divisor option {opt!r}", opos)
    return Divisor(var, a, in_d)


def parse_points(text: str, d: int) -> List[tuple]:
    """Points file for ``--candidates``: tuples separated by commas or newlines."""
    src = _Source(text)
    clean = _blank_comments(text).replace(";", ",").replace("\n", ",")
    out = []
    for item, pos in _split(clean, 0, ",", src):
        if not item.strip():
            continue
        coords = [_rational(t, p, src) for t, p in _tuple_items(item, pos, src)]
        if len(coords) != d:
            src.error(f"point needs {d} coordinates", _strip(item, pos)[1])
        out.append(tuple(coords))
    return out


def _parse_point_arg(text: str, d: int) -> tuple:
    try:
        coords = tuple(Fraction(c) for c in text.strip("() ").split(","))
    except (ValueError, ZeroDivisionError):
        raise ProblemParseError(f"bad point {text!r}", 1, 1) from None
    if len(coords) != d:
        raise ProblemParseError(f"point needs {d} coordinates", 1, 1)
    return coords


# ---------------------------------------------------------------------------
# commands


def _load(path: str) -> ProblemFile:
    return parse_problem(Path(path).read_text())


def _root(prob: ProblemFile, out) -> Optional[MarkedObject]:
    M, bad = prob.marked()
    for msg in bad:
        print(f"verification failure: {msg}", file=out)
    return None if bad else M


def _fmt_point(p) -> str:
    return _point_text(p)


def cmd_ord(args, out) -> int:
    prob = _load(args.file)
    p = _parse_point_arg(args.point, prob.dim) if args.point else (Fraction(0),) * prob.dim
    print(ord_at(prob.algebra(), p), file=out)
    return EXIT_OK


def _candidates(prob: ProblemFile, args) -> List[tuple]:
    pts = list(prob.points)
    if getattr(args, "candidates", None):
        pts += parse_points(Path(args.candidates).read_text(), prob.dim)
    return pts


def cmd_sing(args, out) -> int:
    prob = _load(args.file)
    G = prob.algebra()
    M = _root(prob, out)
    if M is None:
        return EXIT_VERIFY
    I = sing_ideal(G)
    print("sing ideal: " + ", ".join(f.to_str(prob.names) for f in I.generators), file=out)
    grid = default_grid(prob.dim, radius=args.grid_radius, extra=20, seed=args.seed)
    grid = list(dict.fromkeys(grid))
    hits = [p for p in grid if contains_point(G, p)]
    print(f"grid: {len(hits)} of {len(grid)} points in Sing", file=out)
    for p in hits[:20]:
        print(f"  {_fmt_point(p)}", file=out)
    best, winners = max_t(M, default_candidates(M, _candidates(prob, args)))
    if best is not None:
        where = ", ".join(
            "V(" + ", ".join(c.names(prob.names)) + ")" if isinstance(c, CenterSpec) else _fmt_point(c)
            for c in winners
        )
        print(f"max t over candidates: {best} at {where}", file=out)
    exact = max_t_exact(M)
    print(f"max t: {exact if exact is not None else 'Sing is empty'}", file=out)
    return EXIT_OK


def cmd_diffclose(args, out) -> int:
    prob = _load(args.file)
    for f, n in diff_closure(prob.algebra()).gens:
        print(f"({f.to_str(prob.names)}, {n})", file=out)
    return EXIT_OK


def cmd_transform(args, out) -> int:
    prob = _load(args.file)
    M = _root(prob, out)
    if M is None:
        return EXIT_VERIFY
    wanted = [v.strip() for v in args.center.split(",") if v.strip()]
    unknown = [v for v in wanted if v not in prob.names]
    if unknown or not wanted:
        print(f"error: bad center {args.center!r}", file=sys.stderr)
        return EXIT_PARSE
    c = CenterSpec(tuple(prob.names.index(v) for v in wanted))
    try:
        charts = transform_marked(M, c)
    except (NotPermissibleError, ValueError) as e:
        print(f"verification failure: {e}", file=out)
        return EXIT_VERIFY
    for ch in charts:
        divs = ", ".join(
            f"{prob.names[r.var]}[a={r.a}{', D' if r.in_d else ''}]" for r in ch.chart.exceptional
        )
        print(f"chart {ch.chart.id}: {ch.algebra.to_str(prob.names)}  divisors: {divs}", file=out)
    return EXIT_OK


_EXIT_FOR = {RESOLVED: EXIT_OK, LIMIT: EXIT_LIMIT, UNSUPPORTED: EXIT_UNSUPPORTED}


def _verify(trace, grid_radius: int) -> List[str]:
    problems = list(check_monotonicity(trace))
    problems += [f"{cid}: bookkept a {k} but recomputed {f}" for cid, k, f in trace.mismatches]
    if trace.outcome == RESOLVED and not certify_leaves(trace, grid_radius):
        problems.append("a leaf chart still meets Sing")
    return problems


def _resolve(M: MarkedObject, args):
    return resolve(M, max_steps=args.max_steps, max_degree=args.max_degree, jobs=args.jobs)


def cmd_resolve(args, out) -> int:
    prob = _load(args.file)
    M = _root(prob, sys.stderr)
    if M is None:
        return EXIT_VERIFY
    trace = _resolve(M, args)
    out.write(trace.to_json())
    problems = _verify(trace, args.grid_radius)
    for msg in problems:
        print(f"verification failure: {msg}", file=sys.stderr)
    if problems:
        return EXIT_VERIFY
    return _EXIT_FOR[trace.outcome]


def _battery(A: MarkedObject, B: MarkedObject, points) -> List[str]:
    """Pointwise agreement of the invariants on ``points``."""
    bad = []
    for p in points:
        ina, inb = contains_point(A.algebra, p), contains_point(B.algebra, p)
        if ina != inb:
            bad.append(f"Sing differs at {_fmt_point(p)}")
            continue
        try:
            if ord_at(A.algebra, p) != ord_at(B.algebra, p):
                bad.append(f"ord differs at {_fmt_point(p)}")
            if ina and word_at(A, p) != word_at(B, p):
                bad.append(f"word differs at {_fmt_point(p)}")
        except ZeroAlgebraError:
            pass
    return bad


def _steps(n: int) -> str:
    return f"{n} step" if n == 1 else f"{n} steps"


def cmd_check_equiv(args, out) -> int:
    pa, pb = _load(args.first), _load(args.second)
    if pa.names != pb.names:
        print("NOT EQUIVALENT: different variables", file=out)
        return EXIT_VERIFY
    A, B = _root(pa, out), _root(pb, out)
    if A is None or B is None:
        return EXIT_VERIFY
    ta, tb = _resolve(A, args), _resolve(B, args)
    for t in (ta, tb):
        if t.outcome != RESOLVED:
            print(f"{t.outcome.upper()}: {t.message}", file=out)
            return _EXIT_FOR[t.outcome]
    grid = default_grid(pa.dim, radius=args.grid_radius, extra=20, seed=args.seed)
    rng = random.Random(args.seed)
    grid += [tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(pa.dim)) for _ in range(20)]
    bad = _battery(A, B, grid)
    if not traces_equal(ta, tb):
        print("NOT EQUIVALENT: traces differ", file=out)
        return EXIT_VERIFY
    if bad:
        print("NOT EQUIVALENT: " + "; ".join(bad[:5]), file=out)
        return EXIT_VERIFY
    print(f"EQUIVALENT: traces identical ({_steps(ta.n_blowups)})", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reesalg", description="Rees algebra calculus and resolution")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, files=("file",)):
        for f in files:
            p.add_argument(f, help="problem file")
        p.add_argument("--dump", action="store_true", help="print the parsed problem file and exit")
        p.add_argument("--max-steps", type=int, default=200)
        p.add_argument("--max-degree", type=int, default=40)
        p.add_argument("--grid-radius", type=int, default=2)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)
        return p

    common(sub.add_parser("ord", help="order at a point")).add_argument("--point", help="e.g. 0,0")
    common(sub.add_parser("sing", help="singular locus")).add_argument("--candidates", help="points file")
    common(sub.add_parser("diffclose", help="differential closure"))
    common(sub.add_parser("transform", help="blow up a coordinate center")).add_argument(
        "--center", required=True, help="variables, e.g. x,y"
    )
    common(sub.add_parser("resolve", help="run the resolution driver"))
    common(sub.add_parser("check-equiv", help="compare two resolutions"), ("first", "second"))
    return ap


_COMMANDS = {
    "ord": cmd_ord,
    "sing": cmd_sing,
    "diffclose": cmd_diffclose,
    "transform": cmd_transform,
    "resolve": cmd_resolve,
    "check-equiv": cmd_check_equiv,
}


def main(argv: Sequence[str] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    files = [args.first, args.second] if args.command == "check-equiv" else [args.file]
    try:
        if args.dump:
            for f in files:
                out.write(_load(f).to_text())
            return EXIT_OK
        with groebner_limits(max_degree=args.max_degree):
            return _COMMANDS[args.command](args, out)
    except ProblemParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except GroebnerLimitExceeded as e:
        print(f"limit exceeded: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except ZeroAlgebraError as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
