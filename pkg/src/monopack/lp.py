"""Certified fractional triangle packing computations.

All results are exact rationals.  The default solve path runs a float LP
(scipy/HiGHS) for speed, converts the float solution to rationals by
continued-fraction approximation, repairs it to strict feasibility, and
accepts only if the rational primal and dual values agree exactly; otherwise
it falls back to the exact rational simplex.  Either way, a returned
`SolveResult` with status OPTIMAL carries matching primal and dual
certificates.

Scaling conventions: `nu_star` values are sums of triangle weights; the
total edge weight of a colouring (the quantity thresholded by the search) is
3 * (nu*_red + nu*_blue).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.optimize import linprog

from .graph import BLUE, RED, ColoredGraph, Edge, Triangle, edge_index
from .simplex import ZERO, simplex_max_leq, solve_eq_nonneg

DEFAULT_MAX_DENOMINATOR = 10**6
OPTIMAL = "optimal"
LOWER_BOUND_ONLY = "lower-bound-only"


class WarmStartError(ValueError):
    """Raised when a supplied warm-start packing is infeasible."""


def triangle_edges(t: Triangle) -> tuple[Edge, Edge, Edge]:
    i, j, k = t
    return (i, j), (i, k), (j, k)


@dataclass(frozen=True)
class FractionalPacking:
    """Exact rational weights on monochromatic triangles of one colour."""

    color: str
    weights: dict[Triangle, Fraction] = field(default_factory=dict)

    def value(self) -> Fraction:
        return sum(self.weights.values(), ZERO)

    def edge_weight_total(self) -> Fraction:
        return 3 * self.value()

    def edge_loads(self) -> dict[Edge, Fraction]:
        loads: dict[Edge, Fraction] = {}
        for t, w in self.weights.items():
            for e in triangle_edges(t):
                loads[e] = loads.get(e, ZERO) + w
        return loads

    def check_feasible(self, g: ColoredGraph) -> None:
        """Raise ValueError unless this is a valid packing in g's colour class."""
        mono = set(g.monochromatic_triangles(self.color))
        for t, w in self.weights.items():
            if t not in mono:
                raise ValueError(f"triangle {t} is not {self.color}-monochromatic")
            if not (0 <= w <= 1):
                raise ValueError(f"triangle {t} has weight {w} outside [0, 1]")
        for e, load in self.edge_loads().items():
            if load > 1:
                raise ValueError(f"edge {e} is overloaded: {load}")


@dataclass(frozen=True)
class FractionalCover:
    """Non-negative edge weights covering every monochromatic triangle (LP dual)."""

    color: str
    edge_weights: dict[Edge, Fraction] = field(default_factory=dict)

    def value(self) -> Fraction:
        return sum(self.edge_weights.values(), ZERO)

    def check_feasible(self, g: ColoredGraph) -> None:
        for e, y in self.edge_weights.items():
            if y < 0:
                raise ValueError(f"edge {e} has negative cover weight {y}")
        for t in g.monochromatic_triangles(self.color):
            s = sum((self.edge_weights.get(e, ZERO) for e in triangle_edges(t)), ZERO)
            if s < 1:
                raise ValueError(f"triangle {t} is not covered: {s} < 1")


@dataclass(frozen=True)
class SolveResult:
    packing: FractionalPacking
    cover: FractionalCover
    primal_value: Fraction
    dual_value: Fraction
    status: str

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


@dataclass(frozen=True)
class PackValue:
    """pack(G) = 3(nu*_red + nu*_blue), with both LP certificates."""

    value: Fraction
    red: SolveResult
    blue: SolveResult


def _repair_packing(
    weights: dict[Triangle, Fraction], triangles: list[Triangle]
) -> dict[Triangle, Fraction]:
    """Clamp to [0, 1] and uniformly down-scale per over-full edge."""
    w = {t: min(max(weights.get(t, ZERO), ZERO), Fraction(1)) for t in triangles}
    w = {t: v for t, v in w.items() if v > 0}
    by_edge: dict[Edge, list[Triangle]] = {}
    for t in w:
        for e in triangle_edges(t):
            by_edge.setdefault(e, []).append(t)
    for e, ts in by_edge.items():
        load = sum((w[t] for t in ts if t in w), ZERO)
        if load > 1:
            scale = Fraction(1) / load
            for t in ts:
                if t in w:
                    w[t] *= scale
    return {t: v for t, v in w.items() if v > 0}


def rationalize(
    float_weights: dict[Triangle, float | Fraction],
    g: ColoredGraph,
    color: str,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
) -> FractionalPacking:
    """Continued-fraction rationalisation of approximate triangle weights.

    The result is always strictly feasible: weights are clamped to [0, 1],
    triangles that are not monochromatic of `color` are dropped, and every
    over-full edge is repaired by uniformly scaling down its triangles.
    """
    triangles = g.monochromatic_triangles(color)
    tset = set(triangles)
    approx: dict[Triangle, Fraction] = {}
    for t, v in float_weights.items():
        if t not in tset:
            continue
        q = v if isinstance(v, Fraction) else Fraction(v).limit_denominator(max_denominator)
        if q > 0:
            approx[t] = q
    return FractionalPacking(color, _repair_packing(approx, triangles))


def _repair_cover(
    edge_weights: dict[Edge, Fraction], triangles: list[Triangle]
) -> dict[Edge, Fraction] | None:
    y = {e: v for e, v in edge_weights.items() if v > 0}
    worst = None
    for t in triangles:
        s = sum((y.get(e, ZERO) for e in triangle_edges(t)), ZERO)
        if worst is None or s < worst:
            worst = s
    if worst is not None and worst < 1:
        if worst <= 0:
            return None
        scale = Fraction(1) / worst
        y = {e: v * scale for e, v in y.items()}
    return y


def _float_solve(triangles: list[Triangle]):
    """Float LP for max total weight; returns (weights, duals) or None."""
    edges = sorted({e for t in triangles for e in triangle_edges(t)})
    eidx = {e: i for i, e in enumerate(edges)}
    a = np.zeros((len(edges), len(triangles)))
    for col, t in enumerate(triangles):
        for e in triangle_edges(t):
            a[eidx[e], col] = 1.0
    res = linprog(
        c=-np.ones(len(triangles)),
        A_ub=a,
        b_ub=np.ones(len(edges)),
        bounds=(0, None),  # x <= 1 is implied by the edge constraints
        method="highs",
    )
    if not res.success:
        return None
    duals = -np.asarray(res.ineqlin.marginals)
    return res.x, {e: duals[i] for e, i in eidx.items()}


def _exact_solve(triangles: list[Triangle], color: str, prefer: list[int] | None = None):
    edges = sorted({e for t in triangles for e in triangle_edges(t)})
    eidx = {e: i for i, e in enumerate(edges)}
    rows = [[ZERO] * len(triangles) for _ in edges]
    for col, t in enumerate(triangles):
        for e in triangle_edges(t):
            rows[eidx[e]][col] = Fraction(1)
    b = [Fraction(1)] * len(edges)
    c = [Fraction(1)] * len(triangles)
    x, y, value = simplex_max_leq(rows, b, c, prefer=prefer)
    packing = FractionalPacking(
        color, {t: x[col] for col, t in enumerate(triangles) if x[col] > 0}
    )
    cover = FractionalCover(color, {e: y[i] for e, i in eidx.items() if y[i] > 0})
    return SolveResult(packing, cover, value, value, OPTIMAL)


def nu_star(
    g: ColoredGraph,
    color: str,
    warm: FractionalPacking | None = None,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
    exact_only: bool = False,
) -> SolveResult:
    """Maximum fractional triangle packing of one colour class, certified.

    Triangles touching unassigned edges contribute no LP variable, so on a
    partial colouring this is the maximum packing of the assigned part.  A
    warm-start packing must be feasible (WarmStartError otherwise); its
    support steers the pricing order of the exact solver.
    """
    triangles = g.monochromatic_triangles(color)
    tset = set(triangles)
    prefer = None
    if warm is not None:
        if warm.color != color:
            raise WarmStartError(f"warm start has colour {warm.color}, expected {color}")
        try:
            warm.check_feasible(g)
        except ValueError as exc:
            raise WarmStartError(f"infeasible warm start: {exc}") from exc
        col_of = {t: i for i, t in enumerate(triangles)}
        prefer = sorted(
            (col_of[t] for t in warm.weights if t in tset),
            key=lambda col: -warm.weights[triangles[col]],
        )

    if not triangles:
        return SolveResult(
            FractionalPacking(color), FractionalCover(color), ZERO, ZERO, OPTIMAL
        )

    if not exact_only:
        sol = _float_solve(triangles)
        if sol is not None:
            xs, duals = sol
            packing = rationalize(
                {t: float(xs[i]) for i, t in enumerate(triangles)},
                g,
                color,
                max_denominator,
            )
            y = {
                e: Fraction(v).limit_denominator(max_denominator)
                for e, v in duals.items()
                if v > 1e-12
            }
            y = _repair_cover(y, triangles)
            if y is not None:
                primal = packing.value()
                dual = sum(y.values(), ZERO)
                if primal == dual:
                    cover = FractionalCover(color, y)
                    return SolveResult(packing, cover, primal, dual, OPTIMAL)

    return _exact_solve(triangles, color, prefer)


def pack(g: ColoredGraph, exact_only: bool = False) -> PackValue:
    """pack(G): total edge weight of the best monochromatic packings of both colours."""
    red = nu_star(g, RED, exact_only=exact_only)
    blue = nu_star(g, BLUE, exact_only=exact_only)
    return PackValue(3 * (red.primal_value + blue.primal_value), red, blue)


@dataclass(frozen=True)
class ExceedCertificate:
    """Two exact feasible packings whose combined edge weight beats a threshold."""

    red: FractionalPacking
    blue: FractionalPacking
    total: Fraction  # 3 * (red + blue triangle weight)
    threshold: Fraction

    def check(self, g: ColoredGraph) -> None:
        self.red.check_feasible(g)
        self.blue.check_feasible(g)
        total = self.red.edge_weight_total() + self.blue.edge_weight_total()
        if total != self.total or not total > self.threshold:
            raise ValueError("certificate does not exceed its threshold")


def certified_exceeds(
    g: ColoredGraph,
    threshold: Fraction,
    red: FractionalPacking | None = None,
    blue: FractionalPacking | None = None,
) -> ExceedCertificate | None:
    """Sound pruning test: a certificate that pack of the assigned part strictly
    exceeds `threshold`, or None.  Never a false positive.

    Pre-computed feasible packings may be passed in; they are re-solved only
    when absent.
    """
    threshold = Fraction(threshold)
    if red is None:
        red = nu_star(g, RED).packing
    if blue is None:
        blue = nu_star(g, BLUE).packing
    total = red.edge_weight_total() + blue.edge_weight_total()
    if total > threshold:
        cert = ExceedCertificate(red, blue, total, threshold)
        cert.check(g)
        return cert
    return None


# -- fractional decompositions -------------------------------------------


def _triangles_of_simple_graph(n: int, edges: set[Edge]) -> list[Triangle]:
    return [
        (i, j, k)
        for i, j, k in combinations(range(n), 3)
        if (i, j) in edges and (i, k) in edges and (j, k) in edges
    ]


def _normalize_edges(edges) -> set[Edge]:
    return {(min(i, j), max(i, j)) for i, j in edges}


def frac_decomposition(n: int, edges):
    """Fractional triangle decomposition of a simple graph (every edge weight 1).

    Returns (packing, None) on success or (None, farkas) on infeasibility,
    where farkas maps edges to rationals with sum_{e in T} y_e >= 0 for every
    triangle T and sum_e y_e < 0.
    """
    es = sorted(_normalize_edges(edges))
    if not es:
        return FractionalPacking(RED, {}), None
    triangles = _triangles_of_simple_graph(n, set(es))
    in_some = {e for t in triangles for e in triangle_edges(t)}
    uncovered = [e for e in es if e not in in_some]
    if uncovered:
        # an edge in no triangle can never reach weight 1
        farkas = {e: Fraction(-1) if e == uncovered[0] else ZERO for e in es}
        return None, farkas
    rows = [[ZERO] * len(triangles) for _ in es]
    eidx = {e: i for i, e in enumerate(es)}
    for col, t in enumerate(triangles):
        for e in triangle_edges(t):
            rows[eidx[e]][col] = Fraction(1)
    x, y = solve_eq_nonneg(rows, [Fraction(1)] * len(es))
    if x is not None:
        packing = FractionalPacking(
            RED, {t: x[col] for col, t in enumerate(triangles) if x[col] > 0}
        )
        return packing, None
    return None, {e: y[i] for e, i in eidx.items()}


def prescribed_packing(n: int, demand: dict[Edge, Fraction]):
    """Packing of K_n whose edge weights equal `demand` exactly, if one exists.

    Returns (packing, None) or (None, farkas) as in `frac_decomposition`.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    demand = {(min(i, j), max(i, j)): Fraction(v) for (i, j), v in demand.items()}
    for e, v in demand.items():
        if not (0 <= v <= 1):
            raise ValueError(f"demand on edge {e} is {v}, outside [0, 1]")
    full = {e: demand.get(e, ZERO) for e in combinations(range(n), 2)}
    zero_edges = {e for e, v in full.items() if v == 0}
    es = sorted(e for e, v in full.items() if v > 0)
    triangles = [
        t
        for t in combinations(range(n), 3)
        if not any(e in zero_edges for e in triangle_edges(t))
    ]
    if not es:
        return FractionalPacking(RED, {}), None
    rows = [[ZERO] * len(triangles) for _ in es]
    eidx = {e: i for i, e in enumerate(es)}
    for col, t in enumerate(triangles):
        for e in triangle_edges(t):
            if e in eidx:
                rows[eidx[e]][col] = Fraction(1)
    x, y = solve_eq_nonneg(rows, [full[e] for e in es])
    if x is not None:
        packing = FractionalPacking(
            RED, {t: x[col] for col, t in enumerate(triangles) if x[col] > 0}
        )
        return packing, None
    return None, {e: y[i] for e, i in eidx.items()}


# -- exact integral packing oracle ---------------------------------------


def integer_nu(n: int, edges) -> int:
    """Maximum number of edge-disjoint triangles, by exhaustive branch and bound.

    Restricted to n <= 9; this is the small-n oracle for nu <= nu*.
    """
    if n > 9:
        raise ValueError(f"integer_nu is an exhaustive oracle for n <= 9, got n={n}")
    es = _normalize_edges(edges)
    triangles = _triangles_of_simple_graph(n, es)
    if not triangles:
        return 0
    tri_masks = []
    eidx = {e: i for i, e in enumerate(sorted(es))}
    for t in triangles:
        mask = 0
        for e in triangle_edges(t):
            mask |= 1 << eidx[e]
        tri_masks.append(mask)

    best = 0

    def dfs(start: int, used: int, count: int, free_edges: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + free_edges // 3 <= best:
            return
        for i in range(start, len(tri_masks)):
            m = tri_masks[i]
            if m & used:
                continue
            dfs(i + 1, used | m, count + 1, free_edges - 3)

    dfs(0, 0, 0, len(es))
    return best
