"""Sequential MST routines: Kruskal, Prim, Borůvka, and an exhaustive oracle."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import DisjointSet, GraphError, WeightedGraph, connected_components

BRUTE_FORCE_MAX_N = 12


@dataclass(frozen=True)
class MstResult:
    edges: frozenset[int]
    total_weight: float
    phase_count: int = 0
    stats: dict[str, int] = field(default_factory=dict, compare=False)

    @classmethod
    def from_edges(cls, g: WeightedGraph, edges, phase_count: int = 0, stats=None) -> "MstResult":
        edges = frozenset(edges)
        return cls(edges, g.total_weight(edges), phase_count, dict(stats or {}))

    def sorted_edges(self) -> list[int]:
        return sorted(self.edges)


def kruskal(g: WeightedGraph) -> MstResult:
    """Minimum spanning forest by scanning edges in ascending EdgeKey order.

    The textbook version pops edges from a heap, costing about
    (n-1) log(n^2) heap operations for a dense graph; a full sort has the
    same asymptotics and gives a fixed scan order.
    """
    order = sorted(g.edges, key=lambda e: (e.weight, e.id))
    dsu = DisjointSet(g.n)
    chosen = []
    scanned = 0
    target = g.n - connected_components(g)[1]
    for e in order:
        if len(chosen) == target:
            break
        scanned += 1
        if dsu.union(e.u, e.v):
            chosen.append(e.id)
    return MstResult.from_edges(g, chosen, 0, {"edges_scanned": scanned, "unions": len(chosen)})


def prim(g: WeightedGraph, start: int = 0) -> MstResult:
    """Grow one tree from ``start``; on disconnected input only start's component is spanned."""
    if not 0 <= start < g.n:
        raise GraphError(f"start vertex {start} out of range for n={g.n}")
    in_tree = [False] * g.n
    in_tree[start] = True
    heap: list[tuple[float, int, int]] = []
    pushes = pops = 0

    def push_incident(x: int) -> None:
        nonlocal pushes
        for y, eid in g.neighbors(x):
            if not in_tree[y]:
                heapq.heappush(heap, (g.edges[eid].weight, eid, y))
                pushes += 1

    push_incident(start)
    chosen = []
    while heap:
        _, eid, y = heapq.heappop(heap)
        pops += 1
        if in_tree[y]:
            continue
        in_tree[y] = True
        chosen.append(eid)
        push_incident(y)
    return MstResult.from_edges(g, chosen, 0, {"heap_pushes": pushes, "heap_pops": pops})


def boruvka(g: WeightedGraph) -> MstResult:
    """Phase-wise Borůvka: every component takes its lightest outgoing edge."""
    dsu = DisjointSet(g.n)
    chosen: set[int] = set()
    phases = 0
    scanned = 0
    while True:
        best: dict[int, tuple[float, int]] = {}
        for e in g.edges:
            ru, rv = dsu.find(e.u), dsu.find(e.v)
            if ru == rv:
                continue
            scanned += 1
            key = (e.weight, e.id)
            for r in (ru, rv):
                cur = best.get(r)
                if cur is None or key < cur:
                    best[r] = key
        if not best:
            break
        phases += 1
        for _, eid in sorted(set(best.values())):
            e = g.edges[eid]
            dsu.union(e.u, e.v)
            chosen.add(eid)
    return MstResult.from_edges(g, chosen, phases, {"edges_scanned": scanned, "unions": len(chosen)})


def brute_force_mst(g: WeightedGraph) -> MstResult:
    """Exhaustive oracle: enumerate every spanning tree and keep the cheapest.

    Ties in total weight are broken the way the (weight, id) edge order
    would break them: compare the trees' edge ids from the largest down.
    Totals are compared as exact rationals so float summation order cannot
    decide a tie.
    """
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got n={n}")
    labels, k = connected_components(g)
    if k != 1:
        raise GraphError(f"graph is disconnected ({k} components); no spanning tree exists")
    if n == 1:
        return MstResult.from_edges(g, (), 0, {"trees": 1})

    edges = g.edges
    m = len(edges)
    exact = [Fraction(e.weight) for e in edges]
    best_key = None
    best_tree: tuple[int, ...] = ()
    trees = 0

    # union-find without path compression so that unions can be undone
    parent = list(range(n))
    size = [1] * n

    def root(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def still_connectable(chosen: list[int], start: int) -> bool:
        d = DisjointSet(n)
        for eid in chosen:
            d.union(edges[eid].u, edges[eid].v)
        for e in edges[start:]:
            d.union(e.u, e.v)
            if d.count == 1:
                return True
        return d.count == 1

    chosen: list[int] = []

    def rec(i: int, total: Fraction) -> None:
        nonlocal best_key, best_tree, trees
        if len(chosen) == n - 1:
            trees += 1
            if best_key is None or total <= best_key[0]:
                key = (total, tuple(sorted(chosen, reverse=True)))
                if best_key is None or key < best_key:
                    best_key, best_tree = key, tuple(chosen)
            return
        if m - i < n - 1 - len(chosen):
            return
        e = edges[i]
        ru, rv = root(e.u), root(e.v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(i)
            rec(i + 1, total + exact[i])
            chosen.pop()
            size[ru] -= size[rv]
            parent[rv] = rv
        if still_connectable(chosen, i + 1):
            rec(i + 1, total)

    rec(0, Fraction(0))
    return MstResult.from_edges(g, best_tree, 0, {"trees": trees})
