"""Rees algebras given by weighted generators, and the operators on them."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from .ideals import Ideal, ZeroIdealError, groebner_basis, ideal_membership, ideals_equal
from .polyalg import DimensionError, Poly, delta, multi_indices

Gen = Tuple[Poly, int]


@dataclass(frozen=True)
class ReesAlgebra:
    """The subalgebra O[f_1 W^n_1, ..., f_s W^n_s] of O[W].

    An empty generator list is the zero algebra O (every I_n = 0).
    """

    gens: Tuple[Gen, ...]
    dim: int

    def __post_init__(self):
        clean = []
        seen = set()
        for f, n in self.gens:
            if int(n) != n or n < 1:
                raise ValueError(f"weights must be positive integers, got {n}")
            if f.dim != self.dim:
                raise DimensionError(f"generator of dimension {f.dim} in dimension {self.dim}")
            key = (f, int(n))
            if f.is_zero() or key in seen:
                continue
            seen.add(key)
            clean.append(key)
        object.__setattr__(self, "gens", tuple(clean))

    @classmethod
    def of(cls, *gens: Gen) -> "ReesAlgebra":
        return cls(tuple(gens), gens[0][0].dim)

    def is_zero(self) -> bool:
        return not self.gens

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(n for _, n in self.gens)

    def lcm_weight(self) -> int:
        return math.lcm(*self.weights) if self.gens else 1

    def max_weight(self) -> int:
        return max(self.weights, default=0)

    def map(self, fn) -> "ReesAlgebra":
        """Apply ``fn`` to every generator polynomial, keeping weights."""
        gens = [(fn(f), n) for f, n in self.gens]
        dim = gens[0][0].dim if gens else self.dim
        return ReesAlgebra(tuple(gens), dim)

    def to_str(self, names=None) -> str:
        return "{" + ", ".join(f"({f.to_str(names)}, {n})" for f, n in self.gens) + "}"

    def __str__(self) -> str:
        return self.to_str()


@dataclass(frozen=True)
class Pair:
    """A Hironaka pair (J, b)."""

    J: Ideal
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("b must be a positive integer")


def from_pair(p: Pair) -> ReesAlgebra:
    if p.J.is_zero():
        raise ZeroIdealError("the pair's ideal must be nonzero")
    return ReesAlgebra(tuple((g, p.b) for g in p.J.generators), p.J.dim)


def _weighted_solutions(weights: Sequence[int], N: int) -> Iterator[Tuple[int, ...]]:
    """All a in N^s with sum a_i * weights[i] == N."""
    s = len(weights)

    def rec(i: int, remaining: int, acc: List[int]):
        if i == s:
            if remaining == 0:
                yield tuple(acc)
            return
        w = weights[i]
        for k in range(remaining // w, -1, -1):
            acc.append(k)
            yield from rec(i + 1, remaining - k * w, acc)
            acc.pop()

    yield from rec(0, N, [])


def graded_piece(G: ReesAlgebra, N: int) -> Ideal:
    """I_N, generated by the weighted-homogeneous products of the generators."""
    if N < 1:
        raise ValueError("N must be positive")
    gens = []
    for a in _weighted_solutions(G.weights, N):
        p = Poly.one(G.dim)
        for (f, _), k in zip(G.gens, a):
            if k:
                p = p * f ** k
        gens.append(p)
    return Ideal(tuple(dict.fromkeys(gens)), G.dim)


def graded_pieces_reduced(G: ReesAlgebra, upto: int) -> List[Ideal]:
    """[I_0, ..., I_upto] as reduced Groebner bases.

    Uses I_n = sum over generators (f, w) of f * I_{n-w}, reducing at every
    level; same ideals as :func:`graded_piece`, without enumerating products.
    """
    pieces = [Ideal.unit(G.dim)]
    for n in range(1, upto + 1):
        gens = []
        for f, w in G.gens:
            if w <= n:
                gens.extend(f * g for g in pieces[n - w].generators)
        I = Ideal(tuple(dict.fromkeys(gens)), G.dim)
        if not I.is_zero():
            I = Ideal(groebner_basis(I), G.dim)
        pieces.append(I)
    return pieces


def odot(G1: ReesAlgebra, G2: ReesAlgebra) -> ReesAlgebra:
    if G1.dim != G2.dim:
        raise DimensionError(f"algebras of dimension {G1.dim} and {G2.dim}")
    return ReesAlgebra(G1.gens + G2.gens, G1.dim)


def _hilbert_basis(weights: Sequence[int], m: int) -> List[Tuple[int, ...]]:
    """Hilbert basis of {a in N^s : m divides sum a_i weights_i}.

    Every irreducible element lies in the box {0..m}^s because m*e_i belongs
    to the monoid.
    """
    s = len(weights)
    members = [
        a
        for a in itertools.product(range(m + 1), repeat=s)
        if any(a) and sum(k * w for k, w in zip(a, weights)) % m == 0
    ]
    members.sort(key=lambda a: (sum(a), tuple(-k for k in a)))
    basis: List[Tuple[int, ...]] = []
    for a in members:
        if not any(all(x <= y for x, y in zip(b, a)) for b in basis):
            basis.append(a)
    return basis


def veronese(G: ReesAlgebra, m: int) -> ReesAlgebra:
    """V^(m)(G): the pieces in degrees divisible by m."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return G
    gens = []
    for a in _hilbert_basis(G.weights, m):
        p = Poly.one(G.dim)
        for (f, _), k in zip(G.gens, a):
            if k:
                p = p * f ** k
        gens.append((p, sum(k * n for k, (_, n) in zip(a, G.gens))))
    return ReesAlgebra(tuple(gens), G.dim)


def natural_closure(G: ReesAlgebra) -> ReesAlgebra:
    return ReesAlgebra(tuple((f, k) for f, n in G.gens for k in range(1, n + 1)), G.dim)


def diff_closure(G: ReesAlgebra) -> ReesAlgebra:
    """Generators Delta^alpha(f) W^(n' - |alpha|), 0 <= |alpha| < n' <= n.

    Order: generator by generator, alpha in graded-lex order, then n'
    descending.
    """
    gens = []
    for f, n in G.gens:
        for alpha in multi_indices(G.dim, n - 1):
            k = sum(alpha)
            d = delta(f, alpha)
            if d.is_zero():
                continue
            for n2 in range(n, k, -1):
                gens.append((d, n2 - k))
    return ReesAlgebra(tuple(gens), G.dim)


def twist(G: ReesAlgebra, omega) -> ReesAlgebra:
    """G(omega): with omega = a/b in lowest terms, the b-th Veronese
    reweighted by W^b -> W^a."""
    omega = Fraction(omega)
    if omega <= 0:
        raise ValueError("omega must be positive")
    a, b = omega.numerator, omega.denominator
    V = veronese(G, b)
    gens = []
    for f, n in V.gens:
        assert (n * a) % b == 0, "Veronese weights must be divisible by b"
        gens.append((f, n * a // b))
    return ReesAlgebra(tuple(gens), G.dim)


def twist_generatorwise(G: ReesAlgebra, omega) -> ReesAlgebra:
    """An integrally equivalent twist that scales with the generator count.

    Each generator (f, n) is twisted on its own: with omega = a/b and
    g = gcd(n, b) it becomes (f^(b/g), n*a/g).  The result has the same
    integral closure as :func:`twist` (the Veronese of a one-generator
    algebra is this power), without the exponential Hilbert-basis search.
    """
    omega = Fraction(omega)
    if omega <= 0:
        raise ValueError("omega must be positive")
    a, b = omega.numerator, omega.denominator
    gens = []
    for f, n in G.gens:
        g = math.gcd(n, b)
        gens.append((f ** (b // g), n * a // g))
    return ReesAlgebra(tuple(gens), G.dim)


# ---------------------------------------------------------------------------
# degree-bounded comparison of algebras


def default_bound(*algebras: ReesAlgebra) -> int:
    return 2 * math.lcm(*(A.lcm_weight() for A in algebras))


def contains_generators(A: ReesAlgebra, gens: Sequence[Gen], **limits) -> bool:
    """True iff f W^n lies in A for every (f, n) in ``gens``."""
    if not gens:
        return True
    top = max(n for _, n in gens)
    pieces = graded_pieces_reduced(A, top)
    return all(ideal_membership(f, pieces[n], **limits) for f, n in gens)


def same_pieces(A: ReesAlgebra, B: ReesAlgebra, bound: int = None, **limits) -> bool:
    """Graded pieces of A and B agree in every degree 1..bound."""
    if bound is None:
        bound = default_bound(A, B)
    pa = graded_pieces_reduced(A, bound)
    pb = graded_pieces_reduced(B, bound)
    return all(ideals_equal(x, y, **limits) for x, y in zip(pa[1:], pb[1:]))


__all__ = [
    "Pair",
    "ReesAlgebra",
    "contains_generators",
    "default_bound",
    "diff_closure",
    "from_pair",
    "graded_piece",
    "graded_pieces_reduced",
    "natural_closure",
    "odot",
    "same_pieces",
    "twist",
    "twist_generatorwise",
    "veronese",
]
