"""Structural classifiers: distance to bipartite, pentagon blow-ups, bad
configurations around an apex vertex.

Simple (uncoloured) graphs, such as a single colour class, are passed around
as a vertex count together with an edge list.

A pentagon blow-up is a partition of the vertices into five non-empty blobs
A_0, ..., A_4 with every A_i - A_{i+1} edge red and every A_i - A_{i+2} edge
blue (indices mod 5); edges inside blobs are unconstrained.  Detection is a
small exact constraint search: blob indices are the variables, each edge
colour restricts the pair of indices, and a solution is accepted only if all
five blobs are non-empty and the certificate re-verifies.  Distance 1 is
decided by exhausting all single-edge flips, so the decision has no false
positives or negatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import BLUE, RED, ColoredGraph, Edge

Triple = tuple[int, int, int]

RED_WINDOW = (0, 2, 3)
BLUE_WINDOW = (0, 1, 2)


def _norm_edge(e) -> Edge:
    i, j = e
    if i == j:
        raise ValueError(f"loop edge ({i}, {j})")
    return (i, j) if i < j else (j, i)


def _adjacency(n: int, edges) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


# -- distance to bipartite -------------------------------------------------


@dataclass(frozen=True)
class BipartitionCert:
    part1: frozenset[int]
    part2: frozenset[int]
    removed_edges: frozenset[Edge]

    def check(self, n: int, edges) -> bool:
        if self.part1 & self.part2 or (self.part1 | self.part2) != set(range(n)):
            return False
        for e in edges:
            e = _norm_edge(e)
            if e in self.removed_edges:
                continue
            i, j = e
            if (i in self.part1) == (j in self.part1):
                return False
        return True


def _two_coloring(n: int, adj) -> list[int] | None:
    """Side (0/1) per vertex if bipartite, else None."""
    side = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for u in adj[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return side


def _shortest_odd_cycle(n: int, adj) -> list[int] | None:
    """Vertex list of a shortest odd cycle, or None if bipartite."""
    best: list[int] | None = None
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
        for v in range(n):
            if dist[v] < 0:
                continue
            for u in adj[v]:
                if u < v or dist[u] < 0 or dist[u] != dist[v]:
                    continue
                # same-level edge closes an odd walk; peel to the split point
                pa, pb = v, u
                path_a, path_b = [v], [u]
                while pa != pb:
                    pa, pb = parent[pa], parent[pb]
                    path_a.append(pa)
                    path_b.append(pb)
                if len(set(path_a) | set(path_b)) != len(path_a) + len(path_b) - 1:
                    continue
                cycle = path_a + path_b[-2::-1]
                if best is None or len(cycle) < len(best):
                    best = cycle
    return best


def bip_distance_at_most(n: int, edges, k: int) -> BipartitionCert | None:
    """Certificate that at most k edge deletions make the graph bipartite.

    Exact decision: branches over the edges of a shortest odd cycle, which
    every valid deletion set must intersect, to depth k.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    edge_set = {_norm_edge(e) for e in edges}

    def rec(current: set[Edge], budget: int) -> set[Edge] | None:
        adj = _adjacency(n, current)
        cycle = _shortest_odd_cycle(n, adj)
        if cycle is None:
            return set()
        if budget == 0:
            return None
        m = len(cycle)
        for t in range(m):
            e = _norm_edge((cycle[t], cycle[(t + 1) % m]))
            sub = rec(current - {e}, budget - 1)
            if sub is not None:
                sub.add(e)
                return sub
        return None

    removed = rec(edge_set, k)
    if removed is None:
        return None
    side = _two_coloring(n, _adjacency(n, edge_set - removed))
    assert side is not None
    part1 = frozenset(v for v in range(n) if side[v] == 0)
    part2 = frozenset(range(n)) - part1
    internal = frozenset(
        e for e in edge_set if (e[0] in part1) == (e[1] in part1)
    )
    return BipartitionCert(part1, part2, internal)


def min_bipartition_deletions(n: int, edges) -> int:
    """Fewest edge deletions that make the graph bipartite (n <= 28).

    Exhaustive over all bipartitions via a split into halves: internal edge
    counts inside each half are tabulated per half-mask, and the cross
    contribution is updated one left vertex at a time in Gray-code order.
    """
    if not 1 <= n <= 28:
        raise ValueError(f"n={n} outside supported range 1..28")
    edge_list = sorted({_norm_edge(e) for e in edges})
    if not edge_list:
        return 0
    a = n // 2
    b = n - a
    masks_r = np.arange(1 << b, dtype=np.int64)
    right_cut = np.zeros(1 << b, dtype=np.int64)
    left_cut = np.zeros(1 << a, dtype=np.int64)
    nb_right = [0] * a  # right-neighbour mask per left vertex
    deg_right = [0] * a
    for i, j in edge_list:
        if j < a:
            masks_l = np.arange(1 << a, dtype=np.int64)
            left_cut += ((masks_l >> i) ^ (masks_l >> j)) & 1
        elif i >= a:
            right_cut += ((masks_r >> (i - a)) ^ (masks_r >> (j - a))) & 1
        else:
            nb_right[i] |= 1 << (j - a)
            deg_right[i] += 1
    c_rows = []
    for i in range(a):
        bits = np.zeros(1 << b, dtype=np.int64)
        for t in range(b):
            if nb_right[i] >> t & 1:
                bits += (masks_r >> t) & 1
        c_rows.append(bits)
    c_all = np.zeros(1 << b, dtype=np.int64)
    for row in c_rows:
        c_all += row
    # Gray-code walk over left masks, maintaining the partial sums for the
    # vertices currently on side 1 of the left half
    best = 0
    d = np.zeros(1 << b, dtype=np.int64)
    sum_deg = 0
    prev_gray = 0
    for t in range(1 << a):
        gray = t ^ (t >> 1)
        changed = gray ^ prev_gray
        if changed:
            i = changed.bit_length() - 1
            if gray >> i & 1:
                d += c_rows[i]
                sum_deg += deg_right[i]
            else:
                d -= c_rows[i]
                sum_deg -= deg_right[i]
        prev_gray = gray
        cut = left_cut[gray] + sum_deg + right_cut + c_all - 2 * d
        m = int(cut.max())
        if m > best:
            best = m
    return len(edge_list) - best


def e_bip(n: int, edges) -> Fraction:
    """Least delta such that deleting delta * n^2 edges leaves a bipartite graph."""
    return Fraction(min_bipartition_deletions(n, edges), n * n)


# -- pentagon blow-up detection --------------------------------------------


@dataclass(frozen=True)
class PentagonCert:
    blobs: tuple[tuple[int, ...], ...]  # five ordered, each sorted, non-empty
    flips: tuple[Edge, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blobs)

    def blob_of(self) -> dict[int, int]:
        return {v: i for i, blob in enumerate(self.blobs) for v in blob}

    def check(self, g: ColoredGraph) -> bool:
        if len(self.blobs) != 5 or any(not b for b in self.blobs):
            return False
        verts = [v for blob in self.blobs for v in blob]
        if len(set(verts)) != len(verts) or len(verts) != g.n:
            return False
        h = g
        for i, j in self.flips:
            h = h.flip_edge(i, j)
        blob = self.blob_of()
        for i in range(g.n):
            for j in range(i + 1, g.n):
                diff = (blob[j] - blob[i]) % 5
                if diff == 0:
                    continue
                want = RED if diff in (1, 4) else BLUE
                if h.color_of(i, j) != want:
                    return False
        return True


_ALLOWED = {
    RED: {b: {b, (b + 1) % 5, (b - 1) % 5} for b in range(5)},
    BLUE: {b: {b, (b + 2) % 5, (b - 2) % 5} for b in range(5)},
}


def _find_blobs(g: ColoredGraph) -> list[list[int]] | None:
    """Partition into five non-empty pentagon blobs, if one exists."""
    n = g.n
    domains: list[set[int]] = [set(range(5)) for _ in range(n)]
    assignment = [-1] * n

    def propagate(stack: list[int], trail: list[tuple[int, set[int] | None]]) -> bool:
        """Assignments propagate to neighbours; False on a wiped-out domain or
        an unsupported blob index.  `trail` records undo information."""
        while stack:
            v = stack.pop()
            allowed_r = _ALLOWED[RED][assignment[v]]
            allowed_b = _ALLOWED[BLUE][assignment[v]]
            for u in range(n):
                if u == v:
                    continue
                allowed = allowed_r if g.color_of(u, v) == RED else allowed_b
                if assignment[u] >= 0:
                    # u may have been forced while v still sat on the stack,
                    # so the mutual edge must be checked here
                    if assignment[u] not in allowed:
                        return False
                    continue
                keep = domains[u] & allowed
                if keep != domains[u]:
                    trail.append((u, domains[u]))
                    domains[u] = keep
                    if not keep:
                        return False
                    if len(keep) == 1:
                        assignment[u] = next(iter(keep))
                        trail.append((u, None))
                        stack.append(u)
        supported = set(a for a in assignment if a >= 0)
        for u in range(n):
            if assignment[u] < 0:
                supported |= domains[u]
        return supported == set(range(5))

    def undo(trail: list[tuple[int, set[int] | None]]) -> None:
        for u, old in reversed(trail):
            if old is None:
                assignment[u] = -1
            else:
                domains[u] = old

    def search() -> bool:
        free = [u for u in range(n) if assignment[u] < 0]
        if not free:
            return len(set(assignment)) == 5
        v = min(free, key=lambda u: len(domains[u]))
        for b in sorted(domains[v]):
            assignment[v] = b
            saved = domains[v]
            domains[v] = {b}
            trail: list[tuple[int, set[int] | None]] = []
            if propagate([v], trail) and search():
                return True
            undo(trail)
            assignment[v] = -1
            domains[v] = saved
        return False

    # rotational symmetry: vertex 0 can be pinned to blob 0
    assignment[0] = 0
    domains[0] = {0}
    if not propagate([0], []) or not search():
        return None
    blobs: list[list[int]] = [[] for _ in range(5)]
    for v, b in enumerate(assignment):
        blobs[b].append(v)
    return blobs


def _canonical_blob_order(blobs: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    """Rotate/reflect so the size vector is lexicographically maximal."""
    variants = []
    for rev in (False, True):
        seq = blobs[::-1] if rev else blobs
        for r in range(5):
            rot = seq[r:] + seq[:r]
            variants.append(
                (
                    tuple(len(b) for b in rot),
                    tuple(tuple(sorted(b)) for b in rot),
                )
            )
    variants.sort(key=lambda t: (tuple(-s for s in t[0]), t[1]))
    return variants[0][1]


def pentagon_distance(g: ColoredGraph, max_flips: int) -> PentagonCert | None:
    """Certificate that g is at most max_flips edge-flips from a pentagon blow-up."""
    if g.n < 5:
        raise ValueError("pentagon blow-ups need at least 5 vertices")
    if max_flips not in (0, 1):
        raise ValueError("max_flips must be 0 or 1")
    if not g.is_complete:
        raise ValueError("pentagon distance is defined for complete colourings")
    candidates: list[tuple[Edge, ...]] = [()]
    if max_flips == 1:
        candidates += [
            ((i, j),) for i in range(g.n) for j in range(i + 1, g.n)
        ]
    for flips in candidates:
        h = g
        for i, j in flips:
            h = h.flip_edge(i, j)
        blobs = _find_blobs(h)
        if blobs is not None:
            cert = PentagonCert(_canonical_blob_order(blobs), flips)
            assert cert.check(g)
            return cert
    return None


# -- bad configurations around an apex -------------------------------------


@dataclass(frozen=True)
class BadConfiguration:
    vertices: Triple  # one per listed blob window, in window order
    color: str
    apex: int
    window: tuple[int, int, int]  # blob indices, mod 5


def bad_configurations(
    g: ColoredGraph, u: int, cert: PentagonCert
) -> list[BadConfiguration]:
    """All bad configurations with apex u: three same-colour neighbours of u,
    one in each blob of a window (i, i+2, i+3) for red or (i, i+1, i+2) for
    blue."""
    if cert.flips:
        raise ValueError("bad configurations need a flip-free pentagon certificate")
    if any(u in blob for blob in cert.blobs):
        raise ValueError(f"apex {u} lies inside a blob")
    nbr = {
        c: [
            [v for v in blob if g.color_of(u, v) == c]
            for blob in cert.blobs
        ]
        for c in (RED, BLUE)
    }
    out: list[BadConfiguration] = []
    for c, offsets in ((RED, RED_WINDOW), (BLUE, BLUE_WINDOW)):
        for i in range(5):
            window = tuple((i + o) % 5 for o in offsets)
            for a in nbr[c][window[0]]:
                for b in nbr[c][window[1]]:
                    for d in nbr[c][window[2]]:
                        out.append(BadConfiguration((a, b, d), c, u, window))
    return out


def max_disjoint_bad_configs(
    configs: list[BadConfiguration],
) -> tuple[int, list[BadConfiguration]]:
    """Maximum number of pairwise vertex-disjoint configurations, with a
    witness family.  Exact branch-and-bound on the shared vertices."""
    sets = [frozenset(c.vertices) for c in configs]
    best: list[int] = []

    def rec(avail: list[int], chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not avail:
            return
        free = set().union(*(sets[k] for k in avail))
        if len(chosen) + len(free) // 3 <= len(best):
            return
        # branch on one vertex: either skip it, or use a configuration through it
        v = next(iter(sets[avail[0]]))
        with_v = [k for k in avail if v in sets[k]]
        for k in with_v:
            rest = [m for m in avail if sets[m].isdisjoint(sets[k])]
            rec(rest, chosen + [k])
        rec([k for k in avail if v not in sets[k]], chosen)

    rec(list(range(len(configs))), [])
    return len(best), [configs[k] for k in best]


def absorb_apex(
    g: ColoredGraph, u: int, cert: PentagonCert
) -> tuple[int, tuple[Edge, ...]]:
    """Cheapest way to absorb u into a blob.

    Returns the smallest blob index i such that placing u in A_i needs the
    fewest flips of edges at u, together with that flip set.
    """
    if cert.flips:
        raise ValueError("absorption needs a flip-free pentagon certificate")
    if any(u in blob for blob in cert.blobs):
        raise ValueError(f"apex {u} lies inside a blob")
    best: tuple[int, tuple[Edge, ...]] | None = None
    for i in range(5):
        flips: list[Edge] = []
        for off, want in ((1, RED), (4, RED), (2, BLUE), (3, BLUE)):
            for v in cert.blobs[(i + off) % 5]:
                if g.color_of(u, v) != want:
                    flips.append((min(u, v), max(u, v)))
        if best is None or len(flips) < len(best[1]):
            best = (i, tuple(sorted(flips)))
    assert best is not None
    return best
