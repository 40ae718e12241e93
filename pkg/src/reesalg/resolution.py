"""The resolution driver: maximal contact, restriction, induction on the
dimension, the monomial endgame, and deterministic traces."""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .basicobj import (
    MarkedObject,
    TValue,
    T_of,
    bookkept_exponents,
    fresh_exponents,
    max_t_exact,
    transform_marked,
)
from .blowup import CenterSpec, Chart, NotPermissibleError, blowup_charts, is_permissible, weighted_transform
from .ideals import (
    GroebnerLimitExceeded,
    Ideal,
    _LIMITS,
    groebner_basis,
    groebner_limits,
    variety_is_empty,
)
from .polyalg import (
    Poly,
    coefficients_in,
    compose_fraction,
    exact_divide,
    factor,
    order_at,
    rational_roots,
    univariate_gcd,
)
from .rees import Pair, ReesAlgebra, contains_generators, default_bound, diff_closure, from_pair
from .singular import contains_point, default_grid, sing_ideal

RESOLVED = "resolved"
LIMIT = "limit-exceeded"
UNSUPPORTED = "unsupported-geometry"


class UnsupportedGeometry(RuntimeError):
    """The driver cannot bring a center to coordinate form."""


# ---------------------------------------------------------------------------
# traces


@dataclass(frozen=True)
class TraceStep:
    """One visit of a chart: the center chosen there (after the recorded
    coordinate change) and the maximal t at that moment."""

    chart: str
    center: Tuple[str, ...]
    t: Optional[TValue]
    kind: str
    coords: Tuple[str, ...] = ()
    t_drop: bool = False

    def to_dict(self) -> dict:
        return {
            "chart": self.chart,
            "center": list(self.center),
            "t": None if self.t is None else {"word": str(self.t.word), "n": self.t.n},
            "kind": self.kind,
            "coords": list(self.coords),
            "t_drop": self.t_drop,
        }


@dataclass
class ResolutionTrace:
    steps: List[TraceStep]
    outcome: str
    message: str = ""
    leaves: List[MarkedObject] = field(default_factory=list, repr=False)
    mismatches: List[tuple] = field(default_factory=list)
    a_checks: int = 0

    def center_steps(self) -> List[TraceStep]:
        return [s for s in self.steps if s.kind in ("blowup", "codim1-adjust", "monomial")]

    @property
    def n_blowups(self) -> int:
        return len(self.center_steps())

    def to_dict(self) -> dict:
        d = {"steps": [s.to_dict() for s in self.steps], "outcome": self.outcome}
        if self.message:
            d["message"] = self.message
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def traces_equal(t1: ResolutionTrace, t2: ResolutionTrace) -> bool:
    """Same outcome and step-by-step equal charts, centers, t, kinds, coordinates."""
    if t1.outcome != t2.outcome or len(t1.steps) != len(t2.steps):
        return False
    return all(
        (a.chart, a.center, a.t, a.kind, a.coords) == (b.chart, b.center, b.t, b.kind, b.coords)
        for a, b in zip(t1.steps, t2.steps)
    )


# ---------------------------------------------------------------------------
# maximal contact and restriction


def maximal_contact(Gd: ReesAlgebra, p: Sequence) -> Poly:
    """First weight-one generator of order exactly one at ``p``."""
    for f, n in Gd.gens:
        if n == 1 and order_at(f, p) == 1:
            return f
    raise RuntimeError("no weight-one generator of order one; the point is not simple")


def to_graph_form(ell: Poly, p: Sequence = None):
    """Write ell = c (x_j - h) with h free of x_j after a linear change.

    ``j`` is the largest index with a nonzero linear coefficient at ``p``.
    Returns (j, h, images) with old x_i = images[i] in the new coordinates;
    the images translate ``p`` to the origin.
    """
    d = ell.dim
    xs = Poly.variables(d)
    p = tuple(Fraction(0) for _ in range(d)) if p is None else tuple(Fraction(c) for c in p)
    shift = [xs[i] + p[i] for i in range(d)]
    f = ell.compose(shift)
    if f.constant_term() != 0 or order_at(f, (0,) * d) != 1:
        raise ValueError("ell must have order one at p")
    lin = [f.coefficient(tuple(int(k == i) for k in range(d))) for i in range(d)]
    j = max(i for i in range(d) if lin[i])
    # new x_j = sum lin_i x_i / lin_j, i.e. old x_j = (x_j lin_j - sum_{i != j} lin_i x_i) / lin_j
    linear = list(xs)
    linear[j] = xs[j] - sum((xs[i] * (lin[i] / lin[j]) for i in range(d) if i != j and lin[i]), Poly.zero(d))
    images = tuple(s.compose(linear) for s in shift)
    g = ell.compose(images)
    c = g.coefficient(tuple(int(k == j) for k in range(d)))
    rest = g - xs[j] * c
    if rest.involves(j):
        raise UnsupportedGeometry(f"non-graph hypersurface {ell}")
    return j, -rest / c, images


def restrict_to_hypersurface(G: ReesAlgebra, j: int, h: Poly) -> ReesAlgebra:
    """Substitute x_j -> h, drop generators that vanish, remove x_j."""
    if h.involves(j):
        raise ValueError("h must not involve x_j")
    xs = list(Poly.variables(G.dim))
    xs[j] = h
    gens = [(f.compose(xs).drop_variable(j), n) for f, n in G.gens]
    return ReesAlgebra(tuple((f, n) for f, n in gens if not f.is_zero()), G.dim - 1)


def _tidy(G: ReesAlgebra) -> ReesAlgebra:
    """Present each weight's generators by a reduced Groebner basis."""
    by_weight = {}
    for f, n in G.gens:
        by_weight.setdefault(n, []).append(f)
    gens = []
    for n in sorted(by_weight):
        gens.extend((g, n) for g in groebner_basis(Ideal(tuple(by_weight[n]), G.dim)))
    return ReesAlgebra(tuple(gens), G.dim)


def _graph_form(ell: Poly, chart: Chart):
    """(j, h) with ell = c (x_j - h), h free of x_j; non-divisor variables
    first, larger index first; a divisor variable only with h = 0."""
    for j in _variable_order(chart):
        if ell.degree_in(j) != 1:
            continue
        parts = coefficients_in(ell, j)
        c = parts[1]
        if not c.is_constant():
            continue
        rest = parts.get(0, Poly.zero(chart.dim))
        if j in chart.e_vars and not rest.is_zero():
            continue
        return j, -rest / c.constant_term()
    return None


def _variable_order(chart: Chart) -> List[int]:
    E = set(chart.e_vars)
    order = sorted((j for j in range(chart.dim) if j not in E), reverse=True)
    return order + sorted(E, reverse=True)


@lru_cache(maxsize=512)
def _unit_factors(units: Tuple[Poly, ...]) -> Tuple[Poly, ...]:
    out = []
    for u in units:
        if u.is_constant():
            continue
        out.append(u)
        out.extend(p for p, _ in factor(u) if p not in out)
    return tuple(dict.fromkeys(out))


def strip_units(f: Poly, units: Sequence[Poly]) -> Poly:
    """Remove every factor of ``f`` that is a unit on the chart."""
    if f.is_zero():
        return f
    changed = True
    while changed:
        changed = False
        for u in _unit_factors(tuple(units)):
            q = exact_divide(f, u)
            if q is not None:
                f, changed = q, True
    return f.monic()


def choose_hypersurface(Gd: ReesAlgebra, chart: Chart):
    """A maximal-contact hypersurface {x_j = h} from the weight-one piece of Gd,
    or a :class:`Cover` that separates a non-graph component.

    Candidates are the reduced Groebner basis of that piece in ascending
    order, then the raw weight-one generators, each with its unit factors
    removed.
    """
    w1 = [f for f, n in Gd.gens if n == 1]
    if not w1:
        raise UnsupportedGeometry("no weight-one elements")
    pools = []
    for pool in (groebner_basis(Ideal(tuple(w1), Gd.dim)), w1):
        pools.append([g for g in (strip_units(f, chart.units) for f in pool) if not g.is_constant()])
    for pool in pools:
        for ell in pool:
            found = _graph_form(ell, chart)
            if found is not None:
                return found
    sing = sing_ideal(Gd)
    for pool in pools:
        for ell in pool:
            cov = _cover_for(ell, sing, chart)
            if cov is not None:
                return cov
    raise UnsupportedGeometry("no weight-one element is a graph over a coordinate hyperplane")


def _cover_for(ell: Poly, sing: Ideal, chart: Chart):
    d = chart.dim
    xs = Poly.variables(d)
    for p, mult in factor(ell):
        if variety_is_empty(Ideal(sing.generators + (p,), d), chart.units):
            continue
        q = exact_divide(ell, p ** mult).monic()
        for j in _variable_order(chart):
            if p.degree_in(j) != 1:
                continue
            parts = coefficients_in(p, j)
            c, h = parts[1], -parts.get(0, Poly.zero(d))
            near = [u for u in (c.monic(), q) if not u.is_constant()]
            if j in chart.e_vars:
                near.append(xs[j])
            if not near:
                continue
            prod = Poly.one(d)
            for u in near:
                prod = prod * u
            if not variety_is_empty(Ideal((p, prod), d), chart.units):
                continue
            return Cover(j, xs[j] + h, c, tuple(near), p)
    return None


# ---------------------------------------------------------------------------
# centers


Level = Tuple[MarkedObject, int, TValue]


@dataclass(frozen=True)
class Center:
    """Blow up V(x_S) after the coordinate change old x_i = images[i].

    ``levels`` are the lower-dimensional problems used to find S, in the
    final coordinates: (object, index of the removed variable one level up,
    its max t).
    """

    S: Tuple[int, ...]
    images: Tuple[Poly, ...]
    monomial: bool = False
    levels: Tuple[Level, ...] = ()


@dataclass(frozen=True)
class Cover:
    """Cover the chart by two principal open sets.

    Near: ``near_units`` are inverted and x_var is replaced through
    old x_var = num / den, den being a unit there.  Far: ``far_unit`` is
    inverted.  The two opens cover the chart.
    """

    var: int
    num: Poly
    den: Poly
    near_units: Tuple[Poly, ...]
    far_unit: Poly

    def lift(self, j: int) -> "Cover":
        """The same cover one dimension up, with a new variable at j."""
        return Cover(
            self.var + (self.var >= j),
            self.num.insert_variable(j),
            self.den.insert_variable(j),
            tuple(u.insert_variable(j) for u in self.near_units),
            self.far_unit.insert_variable(j),
        )


def _restricted_chart(chart: Chart, j: int, images: Sequence[Poly]) -> Chart:
    """Chart on {x_j = 0}; every divisor starts in D with a to be recomputed."""

    def down(i: int) -> int:
        return i - (i > j)

    def restrict(u: Poly) -> Poly:
        return u.compose(images).drop_variable(j)

    recs = tuple(replace(r, var=down(r.var), in_d=True) for r in chart.exceptional if r.var != j)
    names = chart.names[:j] + chart.names[j + 1:]
    return Chart(
        id=f"{chart.id}|{chart.names[j]}",
        names=names,
        exceptional=recs,
        units=tuple(restrict(u) for u in chart.units),
        depth=chart.depth,
    )


def monomial_center(M: MarkedObject) -> Tuple[int, ...]:
    """Smallest minimal divisor set S with sum of a over S at least 1 whose
    intersection meets the chart and lies in Sing."""
    a, _ = M.weak()
    E = M.chart.e_vars
    xs = Poly.variables(M.dim)
    for k in range(1, len(E) + 1):
        for idx in itertools.combinations(range(len(E)), k):
            total = sum((a[i] for i in idx), Fraction(0))
            if total < 1 or any(total - a[i] >= 1 for i in idx):
                continue
            S = tuple(E[i] for i in idx)
            if not is_permissible(M.algebra, CenterSpec(S)):
                continue
            if variety_is_empty(Ideal(tuple(xs[j] for j in S), M.dim), M.chart.units):
                continue
            return S
    raise UnsupportedGeometry("monomial case without a permissible divisor intersection")


def _point_center(M: MarkedObject, T: ReesAlgebra) -> Union[Center, Cover]:
    g = Poly.zero(1)
    for f in sing_ideal(T).generators:
        g = univariate_gcd(g, f)
    roots = [c for c in rational_roots(g) if M.chart.point_allowed((c,))]
    if not roots:
        raise UnsupportedGeometry("the max locus has no rational point")
    c = Fraction(0) if 0 in roots else min(roots, key=lambda r: (abs(r), r))
    x = Poly.variable(0, 1)
    if c == 0:
        return Center((0,), (x,))
    if 0 in M.chart.e_vars:
        return Cover(0, x + c, Poly.one(1), (x,), x - c)
    return Center((0,), (x + c,))


def _still_contact(M: MarkedObject, T: ReesAlgebra, j: int) -> bool:
    """Sing(T) on the chart lies inside {x_j = 0}."""
    xj = Poly.variable(j, M.dim)
    return variety_is_empty(sing_ideal(T), M.chart.units + (xj,))


def find_center(
    M: MarkedObject,
    t: TValue = None,
    t_parent: TValue = None,
    below: Sequence[Level] = (),
) -> Union[Center, Cover, None]:
    """The next center on M's chart, or None when Sing(G) misses the chart.

    ``below`` holds the transformed lower-dimensional problems inherited
    from the parent chart; they are reused while t equals ``t_parent``
    and are otherwise rebuilt by restricting Diff(T(G)) to a fresh
    maximal-contact hypersurface.
    """
    if t is None:
        t = max_t_exact(M)
    if t is None:
        return None
    d = M.dim
    xs = Poly.variables(d)
    if t.word == 0:
        return Center(monomial_center(M), xs, monomial=True)
    T = T_of(M, t)
    if d == 1:
        return _point_center(M, T)
    images = list(xs)
    if below and t == t_parent and _still_contact(M, T, below[0][1]):
        MR, j, tR_parent = below[0]
        deeper = below[1:]
    else:
        Gd = diff_closure(T)
        found = choose_hypersurface(Gd, M.chart)
        if isinstance(found, Cover):
            return found
        j, h = found
        images[j] = xs[j] + h
        Gd2 = Gd.map(lambda f: f.compose(images))
        R = restrict_to_hypersurface(Gd2, j, Poly.zero(d))
        if R.is_zero():
            return Center((j,), tuple(images))
        MR = MarkedObject(_tidy(R), _restricted_chart(M.chart, j, images)).with_fresh_a()
        tR_parent, deeper = None, ()
    tR = max_t_exact(MR)
    sub = find_center(MR, tR, tR_parent, deeper)
    if sub is None:
        raise RuntimeError("restriction of the simple algebra has empty Sing")

    def up(i: int) -> int:
        return i + (i >= j)

    if isinstance(sub, Cover):
        return sub.lift(j)
    lifted = [im.insert_variable(j) for im in sub.images]
    lifted.insert(j, xs[j])
    combined = tuple(im.compose(lifted) for im in images)
    S = tuple(sorted({j} | {up(i) for i in sub.S}))
    if not is_permissible(T.map(lambda f: f.compose(combined)), CenterSpec(S)):
        raise UnsupportedGeometry("lifted center leaves the max locus")
    MR_final = MarkedObject(
        MR.algebra.map(lambda f: f.compose(sub.images)), MR.chart.change_coordinates(sub.images)
    )
    return Center(S, combined, levels=((MR_final, j, tR),) + sub.levels)


def _inherit(levels: Sequence[Level], S: Sequence[int], c: int) -> Tuple[Level, ...]:
    """Transform the lower-dimensional problems into the chart of x_c."""
    out = []
    for Mk, jk, tk in levels:
        if c == jk:
            break
        S = tuple(i - (i > jk) for i in S if i != jk)
        c = c - (c > jk)
        try:
            Mk2 = transform_marked(Mk, CenterSpec(S), parent_max_word=tk.word)[S.index(c)]
        except (ValueError, NotPermissibleError):
            break
        out.append((Mk2, jk, tk))
    return tuple(out)


def monomial_resolve(M: MarkedObject, max_steps: int = 200) -> List[CenterSpec]:
    """Centers of the monomial endgame, depth first."""
    trace = resolve(M, max_steps=max_steps)
    return [CenterSpec(tuple(M.chart.names.index(n) for n in s.center)) for s in trace.steps if s.kind == "monomial"]


# ---------------------------------------------------------------------------
# the driver


def _describe(images: Sequence[Poly], names: Sequence[str]) -> Tuple[str, ...]:
    xs = Poly.variables(len(names))
    return tuple(
        f"{names[i]} -> {im.to_str(names)}" for i, im in enumerate(images) if im != xs[i]
    )


def _cover_children(M: MarkedObject, cov: Cover) -> List[MarkedObject]:
    ch = M.chart
    k = cov.var
    name = ch.names[k]
    xs = Poly.variables(M.dim)
    prod = Poly.one(M.dim)
    for u in cov.near_units:
        prod = prod * u
    gone = {r.var for r in ch.exceptional if exact_divide(prod, xs[r.var]) is not None}

    def move(f: Poly) -> Poly:
        return compose_fraction(f, k, cov.num, cov.den)

    if cov.den.is_constant() and ch.to_root is not None:
        images = list(xs)
        images[k] = cov.num / cov.den.constant_term()
        to_root = tuple(p.compose(images) for p in ch.to_root)
    else:
        to_root = None
    near = Chart(
        id=f"{ch.id}/+{name}",
        names=ch.names,
        exceptional=tuple(r for r in ch.exceptional if r.var not in gone),
        to_root=to_root,
        units=tuple(move(u) for u in ch.units + cov.near_units),
        parent=(ch.id, None),
        depth=ch.depth,
    )
    far = replace(ch, id=f"{ch.id}/-{name}", units=ch.units + (cov.far_unit,), parent=(ch.id, xs))
    return [MarkedObject(M.algebra.map(move), near), MarkedObject(M.algebra, far)]


def _describe_cover(cov: Cover, names: Sequence[str]) -> Tuple[str, ...]:
    name = names[cov.var]
    if cov.den.is_constant():
        move = (cov.num / cov.den.constant_term()).to_str(names)
    else:
        move = f"({cov.num.to_str(names)})/({cov.den.to_str(names)})"
    return (
        f"{name} -> {move}",
        "near: " + ", ".join(u.to_str(names) for u in cov.near_units),
        "far: " + cov.far_unit.to_str(names),
    )


@dataclass
class _Partial:
    steps: List[TraceStep]
    outcome: str = RESOLVED
    message: str = ""
    leaves: List[MarkedObject] = field(default_factory=list)
    mismatches: List[tuple] = field(default_factory=list)
    a_checks: int = 0

    def absorb(self, other: "_Partial", room: int) -> None:
        """Append a child's result, truncated to ``room`` further steps."""
        self.steps.extend(other.steps[:room])
        self.leaves.extend(other.leaves)
        self.mismatches.extend(other.mismatches)
        self.a_checks += other.a_checks
        if len(other.steps) > room or (other.outcome != RESOLVED and len(other.steps) >= room):
            self.outcome, self.message = LIMIT, "step limit reached"
        elif other.outcome != RESOLVED:
            self.outcome, self.message = other.outcome, other.message


def _visit(M: MarkedObject, parent_t: Optional[TValue], below, check_a: bool):
    t = max_t_exact(M)
    drop = parent_t is not None and (t is None or t < parent_t)
    ch = M.chart
    if t is None:
        return TraceStep(ch.id, (), None, "resolved", (), drop), [], [], 0
    res = find_center(M, t, parent_t, below)
    if isinstance(res, Cover):
        step = TraceStep(ch.id, (ch.names[res.var],), t, "localize", _describe_cover(res, ch.names), drop)
        near, far = _cover_children(M, res)
        return step, [(near, ()), (far, _add_unit(below, res.far_unit))], [], 0
    M2 = MarkedObject(M.algebra.map(lambda f: f.compose(res.images)), ch.change_coordinates(res.images))
    c = CenterSpec(res.S)
    if res.monomial:
        kind = "monomial"
    else:
        kind = "blowup" if len(c.S) > 1 else "codim1-adjust"
    step = TraceStep(ch.id, c.names(ch.names), t, kind, _describe(res.images, ch.names), drop)
    children = transform_marked(M2, c, parent_max_word=t.word)
    mism, checks = [], 0
    if check_a:
        for child in children:
            checks += 1
            kept, fresh = bookkept_exponents(child), fresh_exponents(child)
            if kept != fresh:
                mism.append((child.chart.id, kept, fresh))
    pairs = [(child, _inherit(res.levels, c.S, j)) for j, child in zip(c.S, children)]
    return step, pairs, mism, checks


def _add_unit(levels: Sequence[Level], u: Poly) -> Tuple[Level, ...]:
    """Lower levels of the far chart of a cover: invert u where it makes sense."""
    out = []
    for Mk, jk, tk in levels:
        u = u.drop_variable(jk) if not u.involves(jk) else None
        if u is None:
            break
        chart = replace(Mk.chart, units=Mk.chart.units + (u,))
        out.append((MarkedObject(Mk.algebra, chart), jk, tk))
    return tuple(out)


def _run(M: MarkedObject, parent_t, below, budget: int, check_a: bool, pool=None) -> _Partial:
    if budget <= 0:
        return _Partial([], LIMIT, "step limit reached")
    try:
        step, children, mism, checks = _visit(M, parent_t, below, check_a)
    except GroebnerLimitExceeded as e:
        return _Partial([], LIMIT, f"Groebner limit: {e}")
    except (UnsupportedGeometry, NotPermissibleError) as e:
        return _Partial([], UNSUPPORTED, str(e))
    out = _Partial([step], mismatches=mism, a_checks=checks)
    if not children:
        out.leaves.append(M)
        return out
    if pool is not None:
        limits = dict(_LIMITS)
        futures = [
            pool.submit(_run_worker, ch, step.t, lv, budget - 1, check_a, limits) for ch, lv in children
        ]
        results = [f.result() for f in futures]
    else:
        results = None
    for i, (child, lv) in enumerate(children):
        room = budget - len(out.steps)
        r = results[i] if results is not None else _run(child, step.t, lv, room, check_a)
        out.absorb(r, room)
        if out.outcome != RESOLVED:
            break
    return out


def _run_worker(M, parent_t, below, budget, check_a, limits) -> _Partial:
    with groebner_limits(**limits):
        return _run(M, parent_t, below, budget, check_a)


def as_marked(inp: Union[Pair, ReesAlgebra, MarkedObject]) -> MarkedObject:
    if isinstance(inp, MarkedObject):
        return inp
    if isinstance(inp, Pair):
        inp = from_pair(inp)
    return MarkedObject.on_root(inp)


def resolve(
    inp: Union[Pair, ReesAlgebra, MarkedObject],
    max_steps: int = 200,
    max_degree: int = 40,
    jobs: int = 1,
    check_a: bool = True,
) -> ResolutionTrace:
    """Run the driver depth first; children in ascending variable order.

    ``jobs > 1`` resolves the root's charts in worker processes; the trace
    is assembled in the same order as the sequential run.
    """
    M = as_marked(inp)
    with groebner_limits(max_degree=max_degree):
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                r = _run(M, None, (), max_steps, check_a, pool)
        else:
            r = _run(M, None, (), max_steps, check_a)
    return ResolutionTrace(r.steps, r.outcome, r.message, r.leaves, r.mismatches, r.a_checks)


# ---------------------------------------------------------------------------
# checks on finished runs


def _lineage_parent(chart_id: str) -> Optional[str]:
    return chart_id.rsplit("/", 1)[0] if "/" in chart_id else None


def check_monotonicity(trace: ResolutionTrace) -> List[str]:
    """Violations of: t never increases along a lineage, and drops exactly
    where a step is flagged ``t_drop``."""
    seen = {}
    problems = []
    for s in trace.steps:
        parent = _lineage_parent(s.chart)
        if parent is not None and parent in seen:
            pt = seen[parent]
            if s.t is not None and s.t > pt:
                problems.append(f"{s.chart}: t rose from {pt} to {s.t}")
            dropped = s.t is None or s.t < pt
            if dropped != s.t_drop:
                problems.append(f"{s.chart}: drop flag {s.t_drop} but drop is {dropped}")
        if s.t is not None:
            seen[s.chart] = s.t
    return problems


def certify_leaves(trace: ResolutionTrace, grid_radius: int = 2) -> bool:
    """Every leaf has empty Sing on its chart: grid pre-check, then 1 in the
    Sing ideal (with the chart's units inverted) by Groebner bases."""
    for M in trace.leaves:
        G = M.algebra
        if G.is_zero():
            return False
        for p in default_grid(M.dim, radius=grid_radius, extra=10):
            if M.chart.point_allowed(p) and contains_point(G, p):
                return False
        if not variety_is_empty(sing_ideal(G), M.chart.units):
            return False
    return True


def giraud_check(G: ReesAlgebra, c: CenterSpec, bound: int = None) -> bool:
    """Transform of the Diff closure against Diff closure of the transform,
    membership both ways in every chart, weights up to ``bound``."""
    if bound is None:
        bound = default_bound(G)
    Gd = diff_closure(G)
    chart = Chart.root(G.dim)
    for j, (_, sub) in zip(c.S, blowup_charts(chart, c)):
        left = diff_closure(weighted_transform(G, sub, j))
        right = weighted_transform(Gd, sub, j)
        if not contains_generators(left, [(f, n) for f, n in right.gens if n <= bound]):
            return False
        closed_right = diff_closure(right)
        if not contains_generators(closed_right, [(f, n) for f, n in left.gens if n <= bound]):
            return False
    return True


__all__ = [
    "Center",
    "Cover",
    "LIMIT",
    "RESOLVED",
    "ResolutionTrace",
    "TraceStep",
    "UNSUPPORTED",
    "UnsupportedGeometry",
    "as_marked",
    "certify_leaves",
    "check_monotonicity",
    "choose_hypersurface",
    "find_center",
    "giraud_check",
    "maximal_contact",
    "monomial_center",
    "monomial_resolve",
    "resolve",
    "restrict_to_hypersurface",
    "strip_units",
    "to_graph_form",
    "traces_equal",
]
