"""Affine charts and blowups at coordinate centers."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .polyalg import Poly, default_names
from .rees import ReesAlgebra
from .singular import sing_ideal


class NotPermissibleError(ValueError):
    """The center is not contained in the singular locus."""


@dataclass(frozen=True)
class DivisorRecord:
    """Exceptional hypersurface {x_var = 0} of a chart.

    ``label`` is the blowup step that created it; divisors given with the
    input carry label 0.
    """

    var: int
    label: int
    a: Fraction = Fraction(0)
    in_d: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        if self.a < 0:
            raise ValueError("divisor exponents are nonnegative")


@dataclass(frozen=True)
class CenterSpec:
    """The coordinate subspace V(x_j : j in S) of the current chart."""

    S: Tuple[int, ...]

    def __post_init__(self):
        s = tuple(sorted(set(self.S)))
        if not s:
            raise ValueError("a center needs at least one equation")
        object.__setattr__(self, "S", s)

    def names(self, names: Sequence[str]) -> Tuple[str, ...]:
        return tuple(names[j] for j in self.S)


@dataclass(frozen=True)
class Chart:
    """An affine chart with its exceptional divisors and the map to the
    root chart (``to_root[i]`` expresses root variable i in this chart).

    ``units`` are polynomials inverted on this chart; the chart is the open
    set where none of them vanish.  ``to_root`` is None once a coordinate
    change with unit denominators has been applied.
    """

    id: str
    names: Tuple[str, ...]
    exceptional: Tuple[DivisorRecord, ...] = ()
    to_root: Optional[Tuple[Poly, ...]] = ()
    units: Tuple[Poly, ...] = ()
    parent: Optional[Tuple[str, Tuple[Poly, ...]]] = None
    depth: int = 0

    def __post_init__(self):
        vars_ = [r.var for r in self.exceptional]
        if len(set(vars_)) != len(vars_):
            raise ValueError("two divisors on the same variable")
        if self.to_root == ():
            object.__setattr__(self, "to_root", Poly.variables(len(self.names)))

    @classmethod
    def root(cls, d: int, names: Sequence[str] = None, exceptional=(), units=()) -> "Chart":
        names = tuple(names) if names else default_names(d)
        return cls("0", names, tuple(exceptional), units=tuple(units))

    @property
    def dim(self) -> int:
        return len(self.names)

    def record(self, var: int) -> Optional[DivisorRecord]:
        for r in self.exceptional:
            if r.var == var:
                return r
        return None

    @property
    def e_vars(self) -> Tuple[int, ...]:
        return tuple(sorted(r.var for r in self.exceptional))

    @property
    def d_vars(self) -> Tuple[int, ...]:
        return tuple(sorted(r.var for r in self.exceptional if r.in_d))

    def point_allowed(self, p) -> bool:
        return all(u.evaluate(p) != 0 for u in self.units)

    def change_coordinates(self, images: Sequence[Poly], new_id: str = None) -> "Chart":
        """Re-coordinatize by old x_i = images[i] (exceptional variables must map to themselves)."""
        for r in self.exceptional:
            if images[r.var] != Poly.variable(r.var, self.dim):
                raise ValueError("coordinate change moves an exceptional divisor")
        return replace(
            self,
            id=new_id or self.id,
            to_root=_compose_all(self.to_root, images),
            units=tuple(u.compose(images) for u in self.units),
        )


def _compose_all(polys, images):
    return None if polys is None else tuple(p.compose(images) for p in polys)


def _term_in_prime(m, S) -> bool:
    return any(m[j] for j in S)


def is_permissible(G: ReesAlgebra, c: CenterSpec) -> bool:
    """V(x_S) is inside Sing(G): every generator of the Sing ideal lies in
    the monomial prime (x_j : j in S)."""
    return all(
        all(_term_in_prime(m, c.S) for m in g.terms) for g in sing_ideal(G).generators
    )


def blowup_substitution(d: int, S: Sequence[int], j: int) -> Tuple[Poly, ...]:
    xs = Poly.variables(d)
    return tuple(xs[i] * xs[j] if (i in S and i != j) else xs[i] for i in range(d))


def blowup_charts(chart: Chart, c: CenterSpec) -> List[Tuple[Chart, Tuple[Poly, ...]]]:
    """The |S| standard charts of the blowup along V(x_S).

    The new divisor sits on the chosen variable with a = 0 and outside D;
    :func:`reesalg.basicobj.transform_marked` fills in the bookkeeping.
    For |S| = 1 the map is the identity and the divisor is x_j itself.
    """
    out = []
    for j in c.S:
        sub = blowup_substitution(chart.dim, c.S, j)
        # strict transforms: a divisor on x_j is replaced; others keep their variable
        kept = tuple(r for r in chart.exceptional if r.var != j)
        new = DivisorRecord(j, chart.depth + 1)
        suffix = chart.names[j] if len(c.S) > 1 else "~" + chart.names[j]
        child = Chart(
            id=f"{chart.id}/{suffix}",
            names=chart.names,
            exceptional=tuple(sorted(kept + (new,), key=lambda r: r.var)),
            to_root=_compose_all(chart.to_root, sub),
            units=tuple(u.compose(sub) for u in chart.units),
            parent=(chart.id, sub),
            depth=chart.depth + 1,
        )
        out.append((child, sub))
    return out


def total_transform(G: ReesAlgebra, sub: Sequence[Poly]) -> ReesAlgebra:
    return G.map(lambda f: f.compose(sub))


def weighted_transform(G: ReesAlgebra, sub: Sequence[Poly], h: int) -> ReesAlgebra:
    """Pull back and divide each generator f W^n by x_h^n."""
    gens = []
    for f, n in G.gens:
        g = f.compose(sub)
        exps = [0] * G.dim
        exps[h] = n
        try:
            gens.append((g.divide_monomial(exps), n))
        except ValueError:
            raise NotPermissibleError(
                f"pullback of {f} is not divisible by the exceptional variable to the power {n}"
            ) from None
    return ReesAlgebra(tuple(gens), G.dim)


def transform_marked(M, c: CenterSpec, **kw):
    """Transform a marked object along the center ``c``; see basicobj."""
    from .basicobj import transform_marked as _tm

    return _tm(M, c, **kw)


__all__ = [
    "CenterSpec",
    "Chart",
    "DivisorRecord",
    "NotPermissibleError",
    "blowup_charts",
    "blowup_substitution",
    "is_permissible",
    "total_transform",
    "transform_marked",
    "weighted_transform",
]

