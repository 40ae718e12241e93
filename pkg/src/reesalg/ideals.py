"""Finitely generated ideals of Q[x_0..x_{d-1}] and Groebner-based membership."""

from __future__ import annotations

import contextlib
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .polyalg import (
    INF,
    DimensionError,
    Monomial,
    Poly,
    delta,
    grlex_key,
    multi_indices,
    order_along_subspace,
    order_at,
)

DEFAULT_MAX_REDUCTIONS = 5000
DEFAULT_MAX_DEGREE = 40

_LIMITS = {"max_reductions": DEFAULT_MAX_REDUCTIONS, "max_degree": DEFAULT_MAX_DEGREE}


@contextlib.contextmanager
def groebner_limits(max_reductions: int = None, max_degree: int = None):
    """Temporarily change the default Groebner caps."""
    old = dict(_LIMITS)
    if max_reductions is not None:
        _LIMITS["max_reductions"] = max_reductions
    if max_degree is not None:
        _LIMITS["max_degree"] = max_degree
    try:
        yield
    finally:
        _LIMITS.update(old)


class GroebnerLimitExceeded(RuntimeError):
    """The Groebner computation hit its resource cap; the question is undecided."""


class ZeroIdealError(ValueError):
    """An operation that needs a nonzero ideal received the zero ideal."""


@dataclass(frozen=True)
class Ideal:
    generators: Tuple[Poly, ...]
    dim: int

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.dim != self.dim:
                raise DimensionError(f"generator of dimension {g.dim} in an ideal of dimension {self.dim}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *gens: Poly, dim: Optional[int] = None) -> "Ideal":
        if dim is None:
            if not gens:
                raise ValueError("dimension required for the zero ideal")
            dim = gens[0].dim
        return cls(tuple(gens), dim)

    @classmethod
    def unit(cls, dim: int) -> "Ideal":
        return cls((Poly.one(dim),), dim)

    def is_zero(self) -> bool:
        return not self.generators

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def to_str(self, names=None) -> str:
        return "(" + ", ".join(g.to_str(names) for g in self.generators) + ")"

    def __str__(self) -> str:
        return self.to_str()


def _same_dim(I: Ideal, J: Ideal) -> None:
    if I.dim != J.dim:
        raise DimensionError(f"ideals of dimension {I.dim} and {J.dim}")


def _dedupe(polys: Iterable[Poly]) -> Tuple[Poly, ...]:
    seen = set()
    out = []
    for p in polys:
        if p.is_zero() or p in seen:
            continue
        seen.add(p)
        out.append(p)
    return tuple(out)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_dim(I, J)
    return Ideal(_dedupe(I.generators + J.generators), I.dim)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_dim(I, J)
    return Ideal(_dedupe(f * g for f in I.generators for g in J.generators), I.dim)


def ideal_power(I: Ideal, k: int) -> Ideal:
    if k < 1:
        raise ValueError("k must be >= 1")
    gens = []
    for combo in itertools.combinations_with_replacement(range(len(I.generators)), k):
        p = Poly.one(I.dim)
        for i in combo:
            p = p * I.generators[i]
        gens.append(p)
    return Ideal(_dedupe(gens), I.dim)


def ideal_order_at(I: Ideal, p: Sequence) -> float:
    if I.is_zero():
        return INF
    return min(order_at(g, p) for g in I.generators)


def diff_ideal(I: Ideal, r: int) -> Ideal:
    """Extension of ``I`` by all divided-power operators of order <= r."""
    if r < 0:
        raise ValueError("r must be >= 0")
    gens = []
    for g in I.generators:
        for alpha in multi_indices(I.dim, r):
            gens.append(delta(g, alpha))
    return Ideal(_dedupe(gens), I.dim)


def extract_monomial_part(I: Ideal, E: Sequence[int]) -> Tuple[Tuple[int, ...], Ideal]:
    """Split off the largest monomial in the variables ``E`` dividing ``I``.

    Returns the exponent vector (one entry per index in ``E``) and the
    cofactor ideal.
    """
    if I.is_zero():
        raise ZeroIdealError("the zero ideal is divisible by every monomial")
    exps = tuple(int(min(order_along_subspace(g, (j,)) for g in I.generators)) for j in E)
    full = [0] * I.dim
    for j, e in zip(E, exps):
        full[j] = e
    return exps, Ideal(tuple(g.divide_monomial(full) for g in I.generators), I.dim)


# ---------------------------------------------------------------------------
# Groebner bases (Buchberger, graded lex)

_Dict = Dict[Monomial, Fraction]


def _lm(p: _Dict) -> Monomial:
    return max(p, key=grlex_key)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: _Dict) -> _Dict:
    c = p[_lm(p)]
    if c == 1:
        return p
    return {m: v / c for m, v in p.items()}


def _sub_mul(f: _Dict, c: Fraction, shift: Monomial, g: _Dict) -> None:
    # f -= c * x^shift * g, in place
    for m, v in g.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        nv = f.get(mm, 0) - c * v
        if nv:
            f[mm] = nv
        else:
            f.pop(mm, None)


class _Budget:
    def __init__(self, max_reductions: int, max_degree: int):
        self.left = max_reductions
        self.max_degree = max_degree

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise GroebnerLimitExceeded("S-polynomial reduction cap reached")


def _normal_form(f: _Dict, basis: List[_Dict], lms: List[Monomial]) -> _Dict:
    f = dict(f)
    rem: _Dict = {}
    while f:
        m = _lm(f)
        c = f[m]
        for g, lm in zip(basis, lms):
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                _sub_mul(f, c / g[lm], shift, g)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _buchberger(gens: List[_Dict], budget: _Budget) -> List[_Dict]:
    basis: List[_Dict] = []
    lms: List[Monomial] = []
    pairs = set()

    def add(h: _Dict):
        h = _monic(h)
        lm = _lm(h)
        if sum(lm) > budget.max_degree:
            raise GroebnerLimitExceeded("degree cap reached")
        k = len(basis)
        basis.append(h)
        lms.append(lm)
        for i in range(k):
            pairs.add((i, k))

    for g in sorted(gens, key=lambda p: grlex_key(_lm(p))):
        if g:
            r = _normal_form(g, basis, lms)
            if r:
                add(r)
    done = set()
    while pairs:
        i, j = min(pairs, key=lambda ij: (grlex_key(_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.discard((i, j))
        done.add((i, j))
        a, b = lms[i], lms[j]
        L = _lcm(a, b)
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # coprime leading monomials
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lms[k], L):
                continue
            ik = (min(i, k), max(i, k))
            jk = (min(j, k), max(j, k))
            if ik not in pairs and jk not in pairs:
                skip = True
                break
        if skip:
            continue
        budget.spend()
        s = {}
        _sub_mul(s, Fraction(-1), tuple(x - y for x, y in zip(L, a)), basis[i])
        _sub_mul(s, Fraction(1), tuple(x - y for x, y in zip(L, b)), basis[j])
        r = _normal_form(s, basis, lms)
        if r:
            add(r)
    return _reduce_basis(basis)


def _reduce_basis(basis: List[_Dict]) -> List[_Dict]:
    basis = [_monic(b) for b in basis]
    lms = [_lm(b) for b in basis]
    keep = []
    for i, lm in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if j == i:
                continue
            if _divides(other, lm) and (other != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    basis = [basis[i] for i in keep]
    out = []
    for i, b in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r = _normal_form(b, others, [_lm(o) for o in others])
        out.append(_monic(r))
    out.sort(key=lambda p: grlex_key(_lm(p)))
    return out


_GB_CACHE: Dict[Tuple[int, frozenset], Tuple[Poly, ...]] = {}


def groebner_basis(
    I: Ideal,
    max_reductions: int = None,
    max_degree: int = None,
) -> Tuple[Poly, ...]:
    """Reduced Groebner basis (graded lex, monic, ascending leading terms).

    Raises :class:`GroebnerLimitExceeded` when the caps are hit.
    """
    key = (I.dim, frozenset(I.generators))
    cached = _GB_CACHE.get(key)
    if cached is not None:
        return cached
    gens = [dict(g.terms) for g in I.generators]
    if any(g and not any(_lm(g)) for g in gens):
        result: Tuple[Poly, ...] = (Poly.one(I.dim),)
    else:
        if max_reductions is None:
            max_reductions = _LIMITS["max_reductions"]
        if max_degree is None:
            max_degree = _LIMITS["max_degree"]
        basis = _buchberger(gens, _Budget(max_reductions, max_degree))
        result = tuple(Poly._raw(b, I.dim) for b in basis)
    _GB_CACHE[key] = result  # complete value or nothing; idempotent
    return result


def reduce(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Normal form of ``f`` with respect to a Groebner basis."""
    ds = [dict(b.terms) for b in basis]
    return Poly._raw(_normal_form(dict(f.terms), ds, [_lm(b) for b in ds]), f.dim)


def ideal_membership(f: Poly, I: Ideal, **limits) -> bool:
    """Decide ``f in I``; raises GroebnerLimitExceeded when undecided."""
    if f.dim != I.dim:
        raise DimensionError("polynomial and ideal dimensions differ")
    if f.is_zero():
        return True
    if I.is_zero():
        return False
    return reduce(f, groebner_basis(I, **limits)).is_zero()


def ideal_contains(I: Ideal, J: Ideal, **limits) -> bool:
    """True iff every generator of ``J`` lies in ``I``."""
    return all(ideal_membership(g, I, **limits) for g in J.generators)


def ideals_equal(I: Ideal, J: Ideal, **limits) -> bool:
    return ideal_contains(I, J, **limits) and ideal_contains(J, I, **limits)


def contains_unit(I: Ideal, **limits) -> bool:
    if I.is_zero():
        return False
    return ideal_membership(Poly.one(I.dim), I, **limits)


def variety_is_empty(I: Ideal, units: Sequence[Poly] = (), **limits) -> bool:
    """Decide whether V(I) misses the open set where all ``units`` are nonzero.

    Emptiness is over the algebraic closure (weak Nullstellensatz), with the
    open set handled by the Rabinowitsch trick.
    """
    if any(u.is_zero() for u in units):
        return True
    units = [u for u in units if not u.is_constant()]
    if not units:
        return contains_unit(I, **limits)
    prod = Poly.one(I.dim)
    for u in units:
        prod = prod * u
    t = Poly.variable(I.dim, I.dim + 1)
    gens = [g.extend() for g in I.generators] + [Poly.one(I.dim + 1) - t * prod.extend()]
    return contains_unit(Ideal(tuple(gens), I.dim + 1), **limits)


def reduced_ideal(I: Ideal, **limits) -> Ideal:
    """The same ideal presented by its reduced Groebner basis."""
    if I.is_zero():
        return I
    return Ideal(groebner_basis(I, **limits), I.dim)


def substitute_ideal(I: Ideal, images: Sequence[Poly]) -> Ideal:
    dim = images[0].dim if images else I.dim
    return Ideal(_dedupe(g.compose(images) for g in I.generators), dim)


__all__ = [
    "GroebnerLimitExceeded",
    "Ideal",
    "ZeroIdealError",
    "contains_unit",
    "diff_ideal",
    "extract_monomial_part",
    "groebner_basis",
    "groebner_limits",
    "ideal_contains",
    "ideal_membership",
    "ideal_order_at",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "ideals_equal",
    "reduce",
    "reduced_ideal",
    "substitute_ideal",
    "variety_is_empty",
]
