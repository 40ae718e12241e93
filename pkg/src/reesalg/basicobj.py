"""The weak part of a Rees algebra and the invariant t built on it."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .blowup import (
    CenterSpec,
    Chart,
    NotPermissibleError,
    blowup_charts,
    is_permissible,
    weighted_transform,
)
from .ideals import Ideal, diff_ideal, extract_monomial_part, ideal_product, ideal_sum, variety_is_empty
from .polyalg import Poly, order_along_subspace
from .rees import Pair, ReesAlgebra, from_pair, graded_piece, odot, twist_generatorwise
from .singular import ZeroAlgebraError, contains_point, ord_along_subspace, ord_at, sing_ideal


@dataclass(frozen=True, order=True)
class TValue:
    """The pair (word, n), compared lexicographically."""

    word: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "word", Fraction(self.word))

    def __str__(self) -> str:
        return f"({self.word}, {self.n})"


@dataclass(frozen=True)
class MarkedObject:
    """A Rees algebra on a chart, with the chart's divisors E and D."""

    algebra: ReesAlgebra
    chart: Chart
    _weak: list = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self):
        if self.algebra.dim != self.chart.dim:
            raise ValueError("algebra and chart dimensions differ")

    @classmethod
    def on_root(cls, G: ReesAlgebra, names=None, exceptional=(), units=()) -> "MarkedObject":
        return cls(G, Chart.root(G.dim, names, exceptional, units))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def weak(self) -> Tuple[Tuple[Fraction, ...], ReesAlgebra]:
        if not self._weak:
            self._weak.append(weak_part(self))
        return self._weak[0]

    def with_fresh_a(self) -> "MarkedObject":
        """The same object with every divisor exponent recomputed."""
        a, _ = weak_part(self)
        recs = tuple(replace(r, a=x) for r, x in zip(_sorted_records(self.chart), a))
        return MarkedObject(self.algebra, replace(self.chart, exceptional=recs))


def _sorted_records(chart: Chart):
    return tuple(sorted(chart.exceptional, key=lambda r: r.var))


# ---------------------------------------------------------------------------
# weak part


def weak_part(M: MarkedObject) -> Tuple[Tuple[Fraction, ...], ReesAlgebra]:
    """Exponents a (ordered like ``chart.e_vars``) and a weak-part representative.

    a_i is the minimum over generators of ord_{H_i}(f)/n, the exponent that
    extraction from the piece of degree lcm(weights) yields.  Each generator
    (f, n) contributes (f^c / x^(c n a), c n) with c the least integer
    clearing denominators; this has the same integral closure as the
    single-pair representative and avoids forming the big graded piece.
    """
    G = M.algebra
    if G.is_zero():
        raise ZeroAlgebraError("the weak part of the zero algebra is undefined")
    E = M.chart.e_vars
    orders = [[int(order_along_subspace(f, (i,))) for i in E] for f, _ in G.gens]
    a = tuple(
        min(Fraction(row[k], n) for row, (_, n) in zip(orders, G.gens)) for k in range(len(E))
    )
    gens = []
    for f, n in G.gens:
        c = math.lcm(1, *((n * x).denominator for x in a))
        exps = [0] * G.dim
        for i, x in zip(E, a):
            exps[i] = int(c * n * x)
        gens.append(((f ** c).divide_monomial(exps), c * n))
    return a, ReesAlgebra(tuple(gens), G.dim)


def weak_part_literal(M: MarkedObject) -> Tuple[Tuple[Fraction, ...], ReesAlgebra]:
    """Weak part through the graded piece of degree N = lcm(weights)."""
    G = M.algebra
    if G.is_zero():
        raise ZeroAlgebraError("the weak part of the zero algebra is undefined")
    N = G.lcm_weight()
    exps, cof = extract_monomial_part(graded_piece(G, N), M.chart.e_vars)
    return tuple(Fraction(e, N) for e in exps), from_pair(Pair(cof, N))


def word_at(M: MarkedObject, p: Sequence) -> Fraction:
    return ord_at(M.weak()[1], p)


def word_along(M: MarkedObject, S: Sequence[int]) -> Fraction:
    return ord_along_subspace(M.weak()[1], S)


def d_count(chart: Chart, p: Sequence) -> int:
    return sum(1 for j in chart.d_vars if p[j] == 0)


def t_at(M: MarkedObject, p: Sequence) -> TValue:
    return TValue(word_at(M, p), d_count(M.chart, p))


def t_along(M: MarkedObject, c: CenterSpec) -> TValue:
    return TValue(word_along(M, c.S), sum(1 for j in M.chart.d_vars if j in c.S))


# ---------------------------------------------------------------------------
# maximal t

Candidate = Union[tuple, CenterSpec]


def default_candidates(M: MarkedObject, points: Sequence[tuple] = ()) -> List[Candidate]:
    """The origin and every coordinate subspace, then the given points."""
    d = M.dim
    out: List[Candidate] = [tuple(Fraction(0) for _ in range(d))]
    for k in range(1, d + 1):
        out.extend(CenterSpec(S) for S in itertools.combinations(range(d), k))
    for p in points:
        q = tuple(Fraction(x) for x in p)
        if q not in out:
            out.append(q)
    return out


def _candidate_key(c: Candidate):
    if isinstance(c, CenterSpec):
        return (0, c.S)
    return (1, tuple(c))


def max_t(M: MarkedObject, candidates: Sequence[Candidate] = None):
    """Largest t over the candidates lying in Sing, and those attaining it.

    Returns ``(None, [])`` when no candidate lies in Sing.
    """
    if candidates is None:
        candidates = default_candidates(M)
    G = M.algebra
    best: Optional[TValue] = None
    winners: List[Candidate] = []
    for c in candidates:
        if isinstance(c, CenterSpec):
            if not is_permissible(G, c):
                continue
            t = t_along(M, c)
        else:
            if not (M.chart.point_allowed(c) and contains_point(G, c)):
                continue
            t = t_at(M, c)
        if best is None or t > best:
            best, winners = t, [c]
        elif t == best:
            winners.append(c)
    return best, sorted(winners, key=_candidate_key)


def _nonempty(I: Ideal, units) -> bool:
    return not variety_is_empty(I, units)


def _word_ideal(Gweak: ReesAlgebra, w: Fraction) -> Ideal:
    """Ideal of the locus where ord(Gweak) >= w."""
    I = Ideal((), Gweak.dim)
    for g, m in Gweak.gens:
        k = math.ceil(w * m)
        if k >= 1:
            I = ideal_sum(I, diff_ideal(Ideal((g,), Gweak.dim), k - 1))
    return I


def _dm_ideal(chart: Chart, m: int) -> Ideal:
    D = chart.d_vars
    xs = Poly.variables(chart.dim)
    I = Ideal.unit(chart.dim)
    for sub in itertools.combinations(D, m):
        I = ideal_product(I, Ideal(tuple(xs[j] for j in sub), chart.dim))
    return I


def max_word_exact(M: MarkedObject) -> Optional[Fraction]:
    """Maximum of word over Sing(G) on the chart, decided by Groebner bases.

    None when Sing(G) misses the chart.
    """
    units = M.chart.units
    S = sing_ideal(M.algebra)
    if not _nonempty(S, units):
        return None
    _, W = M.weak()
    values = sorted({Fraction(k, m) for g, m in W.gens for k in range(g.total_degree() + 1)})
    lo, hi = 0, len(values) - 1  # values[lo] = 0 always attained
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _nonempty(ideal_sum(S, _word_ideal(W, values[mid])), units):
            lo = mid
        else:
            hi = mid - 1
    return values[lo]


def max_t_exact(M: MarkedObject) -> Optional[TValue]:
    """Maximum of t over all points of Sing(G) on the chart (None if empty)."""
    w = max_word_exact(M)
    if w is None:
        return None
    units = M.chart.units
    base = ideal_sum(sing_ideal(M.algebra), _word_ideal(M.weak()[1], w))
    m = 0
    for k in range(len(M.chart.d_vars), 0, -1):
        if _nonempty(ideal_sum(base, _dm_ideal(M.chart, k)), units):
            m = k
            break
    return TValue(w, m)


def max_t_locus(M: MarkedObject, t: TValue) -> Ideal:
    """Ideal cutting out the points where t is attained (inside Sing)."""
    I = ideal_sum(sing_ideal(M.algebra), _word_ideal(M.weak()[1], t.word))
    if t.n:
        I = ideal_sum(I, _dm_ideal(M.chart, t.n))
    return I


# ---------------------------------------------------------------------------
# the simple algebra T(G)


def dm_algebra(chart: Chart, m: int) -> ReesAlgebra:
    """Weight-one algebra of the points lying on at least m divisors of D."""
    if m < 1 or m > len(chart.d_vars):
        raise ValueError(f"m must lie in 1..{len(chart.d_vars)}, got {m}")
    return from_pair(Pair(_dm_ideal(chart, m), 1))


def T_of(M: MarkedObject, t: TValue = None) -> ReesAlgebra:
    """G ⊙ G^weak(ω) ⊙ D_m for (ω, m) the maximal t."""
    if t is None:
        t = max_t_exact(M)
    if t is None:
        raise ValueError("Sing(G) is empty")
    if t.word == 0:
        raise ValueError("word 0: the algebra is monomial along its max locus")
    T = odot(M.algebra, twist_generatorwise(M.weak()[1], t.word))
    if t.n:
        T = odot(T, dm_algebra(M.chart, t.n))
    return T


# ---------------------------------------------------------------------------
# transforms


def transform_marked(
    M: MarkedObject,
    c: CenterSpec,
    omega: Fraction = None,
    parent_max_word: Fraction = None,
) -> List[MarkedObject]:
    """Weighted transform of M along V(x_S), one object per chart.

    The new divisor gets a = ω − 1 + Σ_{H_i ⊇ C} a_i with ω the word along
    the center.  D' keeps the strict transforms of D when the chart's max
    word equals ``parent_max_word`` and becomes all of E' otherwise.
    """
    G = M.algebra
    if not is_permissible(G, c):
        raise NotPermissibleError(f"center {c.S} is not inside Sing")
    if omega is None:
        omega = word_along(M, c.S)
    origin = tuple(Fraction(0) for _ in range(M.dim))
    if M.chart.point_allowed(origin) and word_at(M, origin) != omega:
        raise ValueError("word is not constant along the center")
    a_new = omega - 1 + sum((r.a for r in M.chart.exceptional if r.var in c.S), Fraction(0))
    out = []
    for j, (chart, sub) in zip(c.S, blowup_charts(M.chart, c)):
        G2 = weighted_transform(G, sub, j)
        recs = tuple(replace(r, a=a_new) if r.var == j else r for r in chart.exceptional)
        child = MarkedObject(G2, replace(chart, exceptional=recs))
        if parent_max_word is not None:
            w = max_word_exact(child) if not G2.is_zero() else None
            if w != parent_max_word:
                recs = tuple(replace(r, in_d=True) for r in recs)
            child = MarkedObject(G2, replace(chart, exceptional=recs))
        out.append(child)
    return out


def fresh_exponents(M: MarkedObject) -> Tuple[Fraction, ...]:
    """Divisor exponents recomputed from the graded piece of degree lcm."""
    if M.algebra.is_zero():
        return tuple(Fraction(0) for _ in M.chart.e_vars)
    return weak_part_literal(M)[0]


def bookkept_exponents(M: MarkedObject) -> Tuple[Fraction, ...]:
    return tuple(r.a for r in _sorted_records(M.chart))


__all__ = [
    "MarkedObject",
    "TValue",
    "T_of",
    "bookkept_exponents",
    "d_count",
    "default_candidates",
    "dm_algebra",
    "fresh_exponents",
    "max_t",
    "max_t_exact",
    "max_t_locus",
    "max_word_exact",
    "t_along",
    "t_at",
    "transform_marked",
    "weak_part",
    "weak_part_literal",
    "word_along",
    "word_at",
]
