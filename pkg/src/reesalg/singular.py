"""Singular loci and the order function of Rees algebras."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import List, Sequence

from .ideals import Ideal, diff_ideal, ideal_sum
from .polyalg import INF, order_along_subspace, order_at
from .rees import ReesAlgebra


class ZeroAlgebraError(ValueError):
    """The order of the zero algebra is undefined."""


class NotSingularError(ValueError):
    """A point outside Sing(G) was passed where one inside is required."""


def sing_ideal(G: ReesAlgebra) -> Ideal:
    """Ideal whose zero set is Sing(G): sum of Diff^(n_i - 1)((f_i))."""
    I = Ideal((), G.dim)
    for f, n in G.gens:
        I = ideal_sum(I, diff_ideal(Ideal((f,), G.dim), n - 1))
    return I


def contains_point(G: ReesAlgebra, p: Sequence) -> bool:
    return all(order_at(f, p) >= n for f, n in G.gens)


def ord_at(G: ReesAlgebra, p: Sequence) -> Fraction:
    """min_i order_at(f_i, p) / n_i as an exact rational."""
    if G.is_zero():
        raise ZeroAlgebraError("ord is undefined for the zero algebra")
    best = INF
    for f, n in G.gens:
        v = order_at(f, p)
        if v != INF:
            best = min(best, Fraction(int(v), n))
    if best == INF:
        raise ZeroAlgebraError("every generator vanishes identically")
    return best


def is_simple_at(G: ReesAlgebra, p: Sequence) -> bool:
    if not contains_point(G, p):
        raise NotSingularError(f"{tuple(p)} is not in Sing(G)")
    return ord_at(G, p) == 1


def ord_along_subspace(G: ReesAlgebra, S: Sequence[int]) -> Fraction:
    """Order at the generic point of V(x_j : j in S)."""
    if G.is_zero():
        raise ZeroAlgebraError("ord is undefined for the zero algebra")
    return min(Fraction(int(order_along_subspace(f, S)), n) for f, n in G.gens)


def default_grid(d: int, radius: int = 2, extra: int = 50, seed: int = 0) -> List[tuple]:
    """Integer points with coordinates in [-radius, radius] (d <= 3) plus
    random small rational points."""
    pts: List[tuple] = []
    if d <= 3:
        pts.extend(tuple(Fraction(c) for c in q) for q in itertools.product(range(-radius, radius + 1), repeat=d))
    rng = random.Random(seed)
    for _ in range(extra):
        pts.append(tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(d)))
    return pts


__all__ = [
    "NotSingularError",
    "ZeroAlgebraError",
    "contains_point",
    "default_grid",
    "is_simple_at",
    "ord_along_subspace",
    "ord_at",
    "sing_ideal",
]
