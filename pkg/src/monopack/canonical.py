"""Canonical forms and isomorphism testing for 2-coloured complete graphs.

The canonical representative of a colouring is found by a backtracking
search over vertex orderings.  A vertex appended at position k contributes
the string of its colours towards the already-placed vertices, refined by an
iterated colour-degree class; the canonical ordering minimises the resulting
sequence lexicographically.  Pruning: (a) only candidates achieving the
minimal next step are expanded, (b) branches that compare worse than the
best sequence found so far are cut, and (c) automorphisms discovered when
two orderings tie are used to skip equivalent candidates.  Colour swap, when
admitted, is handled by canonicalising both the graph and its swap and
keeping the smaller key.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ColoredGraph


@dataclass(frozen=True)
class CanonicalKey:
    key: str  # serialized colour array of the canonical representative
    n: int
    swap_admitted: bool

    def graph(self) -> ColoredGraph:
        return ColoredGraph(self.n, self.key)


@dataclass(frozen=True)
class RelabelWitness:
    """perm[v] = position of original vertex v in the canonical graph."""

    perm: tuple[int, ...]
    swapped: bool


def relabel(g: ColoredGraph, order: list[int]) -> ColoredGraph:
    """Graph whose position-p vertex is original vertex order[p]."""
    n = g.n
    chars = []
    for p in range(n):
        for q in range(p + 1, n):
            chars.append(g.color_of(order[p], order[q]))
    return ColoredGraph(n, "".join(chars))


def refinement_classes(g: ColoredGraph) -> list[int]:
    """Stable colour-degree classes; ids ordered by class signature."""
    n = g.n
    cls = [0] * n
    while True:
        sigs = []
        for v in range(n):
            counts: dict[tuple[int, str], int] = {}
            for u in range(n):
                if u == v:
                    continue
                key = (cls[u], g.color_of(v, u))
                counts[key] = counts.get(key, 0) + 1
            sigs.append((cls[v], tuple(sorted(counts.items()))))
        order = sorted(set(sigs))
        new_cls = [order.index(s) for s in sigs]
        if new_cls == cls:
            return cls
        cls = new_cls


def twin_classes(g: ColoredGraph) -> list[int]:
    """Partition into twins: u, v with identical colours to every other vertex.

    Swapping two twins is an automorphism, so only one member of a class ever
    needs to be tried at any point of the canonical search.
    """
    n = g.n
    rep = list(range(n))
    for v in range(n):
        if rep[v] != v:
            continue
        for u in range(v):
            if rep[u] != u:
                continue
            if all(
                g.color_of(u, w) == g.color_of(v, w)
                for w in range(n)
                if w != u and w != v
            ):
                rep[v] = u
                break
    return rep


class _Search:
    def __init__(self, g: ColoredGraph):
        self.g = g
        self.n = g.n
        self.cls = refinement_classes(g)
        self.twin = twin_classes(g)
        self.best_seq: list[tuple[str, int]] | None = None
        self.best_order: list[int] | None = None
        self.autos: list[tuple[int, ...]] = []

    def run(self) -> list[int]:
        self._dfs([], [])
        assert self.best_order is not None
        return self.best_order

    def _dfs(self, order: list[int], seq: list[tuple[str, int]]) -> None:
        g, n = self.g, self.n
        k = len(order)
        if k == n:
            if self.best_seq is None or seq < self.best_seq:
                self.best_seq = list(seq)
                self.best_order = list(order)
            elif seq == self.best_seq:
                auto = [0] * n
                for a, b in zip(self.best_order, order):
                    auto[a] = b
                self.autos.append(tuple(auto))
            return
        placed = set(order)
        cands = [v for v in range(n) if v not in placed]
        steps = {
            v: ("".join(g.color_of(v, u) for u in order), self.cls[v]) for v in cands
        }
        mk = min(steps.values())
        cands = [v for v in cands if steps[v] == mk]
        # unplaced twins are interchangeable: keep one candidate per twin class
        seen_twin: set[int] = set()
        kept = []
        for v in cands:
            t = self.twin[v]
            if t not in seen_twin:
                seen_twin.add(t)
                kept.append(v)
        cands = kept
        if self.best_seq is not None:
            prefix = self.best_seq[: k + 1]
            cand = seq + [mk]
            if cand > prefix:
                return
        for v in self._orbit_reps(cands, order):
            self._dfs(order + [v], seq + [mk])

    def _orbit_reps(self, cands: list[int], order: list[int]) -> list[int]:
        if not self.autos:
            return cands
        fixing = [a for a in self.autos if all(a[u] == u for u in order)]
        if not fixing:
            return cands
        parent = {v: v for v in cands}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in fixing:
            for v in cands:
                w = a[v]
                if w in parent:
                    ra, rb = find(v), find(w)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        return sorted({find(v) for v in cands})


def _canonical_order(g: ColoredGraph) -> list[int]:
    if g.n <= 1:
        return list(range(g.n))
    return _Search(g).run()


def canonical_key(
    g: ColoredGraph, admit_swap: bool = True
) -> tuple[CanonicalKey, RelabelWitness]:
    """Canonical form of a complete colouring, optionally modulo colour swap.

    Equal keys characterise isomorphism under the admitted symmetry group.
    The witness maps g onto the key's graph.
    """
    if not g.is_complete:
        raise ValueError("canonical forms are defined for complete colourings only")
    order = _canonical_order(g)
    key_str = relabel(g, order).colors
    swapped = False
    if admit_swap:
        gs = g.swap_colors()
        order_s = _canonical_order(gs)
        key_s = relabel(gs, order_s).colors
        if key_s < key_str:
            key_str, order, swapped = key_s, order_s, True
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return (
        CanonicalKey(key_str, g.n, admit_swap),
        RelabelWitness(tuple(perm), swapped),
    )


def are_isomorphic(g: ColoredGraph, h: ColoredGraph, admit_swap: bool = False) -> bool:
    if g.n != h.n:
        return False
    kg, _ = canonical_key(g, admit_swap)
    kh, _ = canonical_key(h, admit_swap)
    return kg.key == kh.key
