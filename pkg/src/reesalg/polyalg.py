"""Sparse multivariate polynomials over the rationals.

Polynomials are immutable maps from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  The canonical term order is
graded lexicographic with the declared variable order (``x0 > x1 > ...``).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

INF = math.inf

DEFAULT_NAMES = ("x", "y", "z", "w", "u", "v", "s", "t")


class DimensionError(ValueError):
    """Raised when operands live in polynomial rings of different dimension."""


def grlex_key(m: Monomial) -> Tuple[int, Monomial]:
    return (sum(m), m)


def default_names(d: int) -> Tuple[str, ...]:
    if d <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:d]
    return tuple(f"x{i}" for i in range(d))


class Poly:
    """An element of Q[x_0, ..., x_{d-1}].

    >>> x, y = Poly.variables(2)
    >>> (x + y) ** 2 == x * x + 2 * x * y + y * y
    True
    """

    __slots__ = ("_terms", "_dim", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar], dim: int):
        clean: Dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            if len(m) != dim:
                raise DimensionError(f"monomial {m} does not have length {dim}")
            if c:
                clean[tuple(m)] = Fraction(c)
        self._terms = clean
        self._dim = dim
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], dim: int) -> "Poly":
        # trusted constructor: terms already nonzero Fractions
        p = object.__new__(cls)
        p._terms = terms
        p._dim = dim
        p._hash = None
        return p

    @classmethod
    def zero(cls, dim: int) -> "Poly":
        return cls._raw({}, dim)

    @classmethod
    def constant(cls, c: Scalar, dim: int) -> "Poly":
        return cls({(0,) * dim: c}, dim)

    @classmethod
    def one(cls, dim: int) -> "Poly":
        return cls.constant(1, dim)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = 1) -> "Poly":
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def variable(cls, i: int, dim: int) -> "Poly":
        e = [0] * dim
        e[i] = 1
        return cls.monomial(e)

    @classmethod
    def variables(cls, dim: int) -> Tuple["Poly", ...]:
        return tuple(cls.variable(i, dim) for i in range(dim))

    # -- basic protocol ---------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._dim == other._dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other, self._dim)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._dim, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other._dim != self._dim:
                raise DimensionError(f"dimension {self._dim} vs {other._dim}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self._dim)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(out, self._dim)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()}, self._dim)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero(self._dim)
            return Poly._raw({m: c * other for m, c in self._terms.items()}, self._dim)
        other = self._coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(out, self._dim)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly":
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        result = Poly.one(self._dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- term-order queries -----------------------------------------------

    def sorted_terms(self, descending: bool = True):
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def leading_monomial(self) -> Monomial:
        return max(self._terms, key=grlex_key)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self * (1 / self.leading_coefficient())

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def degree_in(self, i: int) -> int:
        if not self._terms:
            return -1
        return max(m[i] for m in self._terms)

    def coefficient(self, m: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self._dim)

    def involves(self, i: int) -> bool:
        return any(m[i] for m in self._terms)

    def min_degree(self) -> Union[int, float]:
        """Lowest total degree of a term; infinity for the zero polynomial."""
        if not self._terms:
            return INF
        return min(sum(m) for m in self._terms)

    # -- evaluation and substitution ----------------------------------------

    def __call__(self, *point: Scalar) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self._dim:
            raise DimensionError(f"point of length {len(point)} in dimension {self._dim}")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for v, e in zip(pt, m):
                if e:
                    term *= v ** e
            total += term
        return total

    def compose(self, images: Sequence["Poly"]) -> "Poly":
        """Substitute ``x_i -> images[i]``; the images share a target dimension."""
        if len(images) != self._dim:
            raise DimensionError("one image per variable required")
        if not images:
            return self
        target = images[0].dim
        powers: Dict[Tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        out = Poly.zero(target)
        for m, c in self._terms.items():
            term = Poly.constant(c, target)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def translate(self, shift: Sequence[Scalar]) -> "Poly":
        """Return f(x + shift)."""
        xs = Poly.variables(self._dim)
        return self.compose([x + Fraction(s) for x, s in zip(xs, shift)])

    def drop_variable(self, j: int) -> "Poly":
        """Set ``x_j = 0`` and remove it from the ring."""
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            if m[j] == 0:
                out[m[:j] + m[j + 1:]] = c
        return Poly._raw(out, self._dim - 1)

    def insert_variable(self, j: int) -> "Poly":
        """Embed into a ring with a new variable at position ``j``."""
        return Poly._raw({m[:j] + (0,) + m[j:]: c for m, c in self._terms.items()}, self._dim + 1)

    def extend(self, extra: int = 1) -> "Poly":
        return Poly._raw({m + (0,) * extra: c for m, c in self._terms.items()}, self._dim + extra)

    # -- division by monomials ------------------------------------------------

    def divide_monomial(self, exps: Sequence[int]) -> "Poly":
        """Exact division by x^exps; raises ValueError if a term is not divisible."""
        out = {}
        for m, c in self._terms.items():
            q = tuple(a - b for a, b in zip(m, exps))
            if min(q, default=0) < 0:
                raise ValueError("not divisible by the monomial")
            out[q] = c
        return Poly._raw(out, self._dim)

    def monomial_content(self) -> Monomial:
        """Exponent-wise minimum over all terms (the largest monomial factor)."""
        if not self._terms:
            raise ValueError("zero polynomial has no monomial content")
        return tuple(min(col) for col in zip(*self._terms))

    # -- display ------------------------------------------------------------

    def to_str(self, names: Sequence[str] = None) -> str:
        if names is None:
            names = default_names(self._dim)
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r}, dim={self._dim})"


# ---------------------------------------------------------------------------
# operations named in the module contract


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def poly_pow(f: Poly, k: int) -> Poly:
    return f ** k


def _check_point(f: Poly, p: Sequence[Scalar]) -> None:
    if len(p) != f.dim:
        raise DimensionError(f"point of length {len(p)} in dimension {f.dim}")


def order_at(f: Poly, p: Sequence[Scalar]) -> Union[int, float]:
    """Order of ``f`` in the local ring at the rational point ``p``.

    Returns ``math.inf`` for the zero polynomial.
    """
    _check_point(f, p)
    if f.is_zero():
        return INF
    if not any(p):
        return f.min_degree()
    # Taylor coefficients at p, degree by degree, until one is nonzero
    pt = [Fraction(v) for v in p]
    terms = list(f.terms.items())
    pw: Dict[Tuple[int, int], Fraction] = {}

    def power(i: int, e: int) -> Fraction:
        if (i, e) not in pw:
            pw[(i, e)] = pt[i] ** e
        return pw[(i, e)]

    for k in range(f.total_degree() + 1):
        for beta in _compositions(k, f.dim):
            acc = Fraction(0)
            for m, c in terms:
                if any(e < b for e, b in zip(m, beta)):
                    continue
                term = c
                for i, (e, b) in enumerate(zip(m, beta)):
                    if b:
                        term *= math.comb(e, b)
                    if e > b:
                        term *= power(i, e - b)
                acc += term
            if acc:
                return k
    raise AssertionError("a nonzero polynomial has a nonzero Taylor coefficient")


def _falling(e: int, k: int) -> int:
    # binomial(e, k): the coefficient of T^k in (x + T)^e, up to x^(e-k)
    return math.comb(e, k)


def delta(f: Poly, alpha: Sequence[int]) -> Poly:
    """Divided-power Taylor operator: the coefficient of T^alpha in f(x + T)."""
    alpha = tuple(alpha)
    if len(alpha) != f.dim:
        raise DimensionError("alpha must have one entry per variable")
    if not any(alpha):
        return f
    out: Dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        if any(e < a for e, a in zip(m, alpha)):
            continue
        coeff = c
        for e, a in zip(m, alpha):
            if a:
                coeff *= _falling(e, a)
        q = tuple(e - a for e, a in zip(m, alpha))
        out[q] = out.get(q, 0) + coeff
    return Poly({m: c for m, c in out.items() if c}, f.dim)


def multi_indices(d: int, max_order: int) -> Iterator[Monomial]:
    """All alpha in N^d with |alpha| <= max_order, graded lex ascending by
    degree and, within a degree, with larger leading exponents first."""
    for k in range(max_order + 1):
        for alpha in _compositions(k, d):
            yield alpha


def _compositions(k: int, d: int) -> Iterator[Monomial]:
    if d == 0:
        if k == 0:
            yield ()
        return
    if d == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(k - first, d - 1):
            yield (first,) + rest


def order_along_subspace(f: Poly, S: Iterable[int]) -> Union[int, float]:
    """Order of ``f`` at the generic point of ``V(x_j : j in S)``."""
    S = tuple(S)
    if not S:
        raise ValueError("S must be nonempty")
    if f.is_zero():
        return INF
    return min(sum(m[j] for j in S) for m in f.terms)


# ---------------------------------------------------------------------------
# univariate helpers used by the dimension-one step of the driver


def univariate_coeffs(f: Poly) -> list:
    """Dense coefficient list, lowest degree first, of a one-variable Poly."""
    if f.dim != 1:
        raise DimensionError("univariate polynomial expected")
    if f.is_zero():
        return []
    deg = f.total_degree()
    coeffs = [Fraction(0)] * (deg + 1)
    for (e,), c in f.terms.items():
        coeffs[e] = c
    return coeffs


def univariate_from_coeffs(coeffs: Sequence[Fraction]) -> Poly:
    return Poly({(e,): c for e, c in enumerate(coeffs) if c}, 1)


def univariate_divmod(f: Poly, g: Poly) -> Tuple[Poly, Poly]:
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = univariate_coeffs(f)
    gc = univariate_coeffs(g)
    dg = len(gc) - 1
    q = [Fraction(0)] * max(len(r) - dg, 1)
    while len(r) - 1 >= dg and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) - 1 < dg:
            break
        shift = len(r) - 1 - dg
        factor = r[-1] / gc[-1]
        q[shift] = factor
        for i, c in enumerate(gc):
            r[i + shift] -= factor * c
        r.pop()
    return univariate_from_coeffs(q), univariate_from_coeffs(r)


def univariate_gcd(f: Poly, g: Poly) -> Poly:
    while not g.is_zero():
        f, g = g, univariate_divmod(f, g)[1]
    return f.monic() if not f.is_zero() else f


def _divisors(n: int) -> list:
    n = abs(n)
    small = [i for i in range(1, math.isqrt(n) + 1) if n % i == 0]
    return sorted(set(small + [n // i for i in small]))


def rational_roots(f: Poly) -> list:
    """Distinct rational roots of a nonzero univariate polynomial."""
    coeffs = univariate_coeffs(f)
    if not coeffs:
        raise ValueError("the zero polynomial has every point as a root")
    roots = []
    low = 0
    while not coeffs[low]:
        low += 1
    if low:
        roots.append(Fraction(0))
    coeffs = coeffs[low:]
    lcm = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * lcm) for c in coeffs]
    if len(ints) > 1:
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand not in roots and univariate_from_coeffs(coeffs).evaluate([cand]) == 0:
                        roots.append(cand)
    return sorted(roots)


# ---------------------------------------------------------------------------
# exact division and factorization


def exact_divide(f: Poly, g: Poly):
    """f / g when g divides f exactly, otherwise None."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm_g, lc_g = g.leading_monomial(), g.leading_coefficient()
    q: Dict[Monomial, Fraction] = {}
    r = f
    while not r.is_zero():
        lm = r.leading_monomial()
        shift = tuple(a - b for a, b in zip(lm, lm_g))
        if min(shift, default=0) < 0:
            return None
        c = r.leading_coefficient() / lc_g
        q[shift] = c
        r = r - g * Poly.monomial(shift, c)
    return Poly(q, f.dim)


def coefficients_in(f: Poly, j: int) -> Dict[int, Poly]:
    """f = sum_k coefficients[k] * x_j^k with coefficients free of x_j."""
    out: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in f.terms.items():
        out.setdefault(m[j], {})[m[:j] + (0,) + m[j + 1:]] = c
    return {k: Poly._raw(t, f.dim) for k, t in out.items()}


def compose_fraction(f: Poly, j: int, num: Poly, den: Poly) -> Poly:
    """den^K * f(x_j -> num/den) with K = deg_{x_j} f; num, den free of x_j
    except that num may involve x_j."""
    parts = coefficients_in(f, j)
    K = max(parts, default=0)
    out = Poly.zero(f.dim)
    for k, c in parts.items():
        out = out + c * num ** k * den ** (K - k)
    return out


def factor(f: Poly) -> list:
    """Irreducible factors over Q as (monic factor, multiplicity), sorted by
    degree then leading terms; constants are dropped."""
    import sympy

    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    gens = sympy.symbols(f"_v0:{f.dim}")
    sp = sympy.Poly.from_dict({m: sympy.Rational(c.numerator, c.denominator) for m, c in f.terms.items()}, *gens, domain="QQ")
    _, pieces = sp.factor_list()
    out = []
    for g, e in pieces:
        terms = {m: Fraction(int(c.p), int(c.q)) for m, c in g.as_dict().items()}
        p = Poly(terms, f.dim)
        if not p.is_constant():
            out.append((p.monic(), int(e)))
    out.sort(key=lambda pe: (pe[0].total_degree(), [(grlex_key(m), c) for m, c in pe[0].sorted_terms()]))
    return out


# ---------------------------------------------------------------------------
# text grammar

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9']*)|(\*\*|[-+*^()/]))")


class PolyParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(message)
        self.text = text
        self.pos = pos


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.names = list(names)
        self.dim = len(names)
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            while text[pos].isspace():
                pos += 1
            m = _TOKEN.match(text, pos)
            if not m:
                raise PolyParseError(f"unexpected character {text[pos]!r}", text, pos)
            start = m.start(m.lastindex)
            self.tokens.append((m.group(m.lastindex), m.lastindex, start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg):
        raise PolyParseError(msg, self.text, self.peek()[2])

    def parse(self) -> Poly:
        if not self.tokens:
            self.error("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            self.error(f"unexpected token {self.peek()[0]!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        tok = self.peek()[0]
        if tok in ("+", "-"):
            self.take()
            sign = -1 if tok == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.power()
        while True:
            tok, kind, _ = self.peek()
            if tok == "*":
                self.take()
                acc = acc * self.power()
            elif tok == "/":
                self.take()
                den = self.power()
                if not den.is_constant() or den.is_zero():
                    self.error("division only by nonzero constants")
                acc = acc * (1 / den.constant_term())
            elif kind in (1, 2) or tok == "(":
                # implicit multiplication, e.g. "3/2 x^2" or "2(x+y)"
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] in ("^", "**"):
            self.take()
            tok, kind, _ = self.take()
            if kind != 1 or "/" in tok:
                self.error("exponent must be a natural number")
            return base ** int(tok)
        return base

    def atom(self) -> Poly:
        tok, kind, _ = self.peek()
        if kind == 1:
            self.take()
            return Poly.constant(Fraction(tok), self.dim)
        if kind == 2:
            if tok not in self.names:
                self.error(f"undeclared variable {tok!r}")
            self.take()
            return Poly.variable(self.names.index(tok), self.dim)
        if tok == "(":
            self.take()
            p = self.expr()
            if self.peek()[0] != ")":
                self.error("expected ')'")
            self.take()
            return p
        if tok in ("+", "-"):
            self.take()
            p = self.atom()
            return -p if tok == "-" else p
        self.error(f"unexpected token {tok!r}" if tok else "unexpected end of input")


def parse_poly(text: str, names: Sequence[str]) -> Poly:
    """Parse e.g. ``"3/2*x^2*y - y^3 + 1"`` over the declared variables."""
    return _Parser(text, names).parse()


def all_monomials(d: int, max_degree: int) -> Iterator[Monomial]:
    for k in range(max_degree + 1):
        yield from _compositions(k, d)


def random_poly(rng, d: int, max_degree: int, max_terms: int = 4, coeff_range: int = 3) -> Poly:
    """A random polynomial for property tests; may be zero."""
    monos = list(all_monomials(d, max_degree))
    k = rng.randint(0, max_terms)
    terms = {}
    for m in rng.sample(monos, min(k, len(monos))):
        terms[m] = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 2))
    return Poly(terms, d)


__all__ = [
    "INF",
    "DimensionError",
    "Monomial",
    "Poly",
    "PolyParseError",
    "all_monomials",
    "coefficients_in",
    "compose_fraction",
    "default_names",
    "delta",
    "exact_divide",
    "factor",
    "grlex_key",
    "multi_indices",
    "order_along_subspace",
    "order_at",
    "parse_poly",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "random_poly",
    "rational_roots",
    "univariate_gcd",
    "univariate_divmod",
]

