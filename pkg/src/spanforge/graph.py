"""Weighted undirected graphs, the edge total order, and union-find."""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given data."""


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    weight: float

    @property
    def key(self) -> "EdgeKey":
        return EdgeKey(self.weight, self.id)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


class EdgeKey(NamedTuple):
    """Weight first, then edge id.

    Tuple comparison gives a strict total order on the edges of any graph,
    so every MST routine below has exactly one valid answer.
    """

    weight: float
    id: int


class WeightedGraph:
    """Immutable undirected multigraph on vertices ``0 .. n-1``.

    Edge ids are positions in ``edges``. Parallel edges are allowed,
    self-loops are not.
    """

    __slots__ = ("_n", "_edges", "_adjacency", "_arrays")

    def __init__(self, n: int, edges: Sequence[Edge]):
        self._n = n
        self._edges = tuple(edges)
        self._adjacency = _derive_adjacency(n, self._edges)
        self._arrays = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge id)`` pairs in edge-id order."""
        return self._adjacency

    def edge(self, eid: int) -> Edge:
        return self._edges[eid]

    def neighbors(self, x: int) -> tuple[tuple[int, int], ...]:
        return self._adjacency[x]

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Endpoint and weight columns as read-only numpy arrays."""
        if self._arrays is None:
            u = np.fromiter((e.u for e in self._edges), dtype=np.int64, count=self.m)
            v = np.fromiter((e.v for e in self._edges), dtype=np.int64, count=self.m)
            w = np.fromiter((e.weight for e in self._edges), dtype=np.float64, count=self.m)
            for a in (u, v, w):
                a.flags.writeable = False
            self._arrays = (u, v, w)
        return self._arrays

    def total_weight(self, edge_ids: Iterable[int]) -> float:
        """Sum of weights, accumulated in ascending edge-id order."""
        total = 0.0
        for eid in sorted(edge_ids):
            total += self._edges[eid].weight
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self._n}, m={self.m})"


def _derive_adjacency(n: int, edges: Sequence[Edge]):
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in edges:
        adj[e.u].append((e.v, e.id))
        adj[e.v].append((e.u, e.id))
    return tuple(tuple(a) for a in adj)


def build_graph(n: int, edge_list: Iterable[Sequence]) -> WeightedGraph:
    """Build a graph from ``(u, v, weight)`` triples; ids follow input order."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    edges = []
    for i, (u, v, w) in enumerate(edge_list):
        u, v, w = int(u), int(v), float(w)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {i}: endpoint out of range for n={n}: ({u}, {v})")
        if u == v:
            raise GraphError(f"edge {i}: self-loop at vertex {u}")
        if not math.isfinite(w) or w < 0:
            raise GraphError(f"edge {i}: weight must be finite and non-negative, got {w!r}")
        edges.append(Edge(i, u, v, w))
    return WeightedGraph(n, edges)


def generate_random_graph(
    n: int, m: int, weight_range: tuple[float, float] = (1.0, 100.0), seed: int = 0
) -> WeightedGraph:
    """Seeded connected simple graph with ``n`` vertices and ``m`` edges.

    Uses numpy's PCG64 generator. A random spanning tree is laid over a
    shuffled vertex order (each vertex attaches to a uniformly chosen
    earlier one), then ``m - (n - 1)`` distinct extra pairs are added. Edge
    order is shuffled so ids carry no structure. Weights are uniform in
    ``[lo, hi)``.
    """
    lo, hi = weight_range
    if n < 1:
        raise GraphError(f"need at least one vertex, got n={n}")
    if m < n - 1:
        raise GraphError(f"m={m} < n-1={n - 1}: cannot be connected")
    if m > n * (n - 1) // 2:
        raise GraphError(f"m={m} exceeds n(n-1)/2={n * (n - 1) // 2} for a simple graph")
    if not lo < hi:
        raise GraphError(f"weight range must satisfy lo < hi, got ({lo}, {hi})")
    if lo < 0:
        raise GraphError(f"weights must be non-negative, got lo={lo}")

    rng = np.random.Generator(np.random.PCG64(seed & 0xFFFFFFFFFFFFFFFF))
    order = rng.permutation(n)
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for i in range(1, n):
        a = int(order[i])
        b = int(order[rng.integers(0, i)])
        pairs.append((a, b))
        seen.add((min(a, b), max(a, b)))

    extra = m - (n - 1)
    free = n * (n - 1) // 2 - (n - 1)
    if extra and 2 * extra > free:
        # dense: enumerate the complement and sample from it
        candidates = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in seen]
        picks = rng.choice(len(candidates), size=extra, replace=False)
        pairs.extend(candidates[int(i)] for i in picks)
    else:
        while extra:
            batch = rng.integers(0, n, size=(max(2 * extra, 16), 2))
            for a, b in batch.tolist():
                if a == b:
                    continue
                k = (min(a, b), max(a, b))
                if k in seen:
                    continue
                seen.add(k)
                pairs.append((a, b))
                extra -= 1
                if not extra:
                    break

    weights = rng.uniform(lo, hi, size=m)
    perm = rng.permutation(m)
    return build_graph(n, ((pairs[j][0], pairs[j][1], weights[i]) for i, j in enumerate(perm.tolist())))


def connected_components(g: WeightedGraph) -> tuple[list[int], int]:
    """Label vertices by component; labels are dense and ordered by smallest member."""
    label = [-1] * g.n
    count = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = count
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in g.neighbors(x):
                if label[y] < 0:
                    label[y] = count
                    queue.append(y)
        count += 1
    return label, count


class DisjointSet:
    """Union-find with union by size and path compression."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def __len__(self) -> int:
        return len(self.parent)

    def _check(self, x: int) -> None:
        if not 0 <= x < len(self.parent):
            raise IndexError(f"element {x} outside capacity {len(self.parent)}")

    def find(self, x: int) -> int:
        self._check(x)
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def labels(self) -> list[int]:
        """Dense labels per element, numbered by each set's smallest member."""
        out = [-1] * len(self.parent)
        by_root: dict[int, int] = {}
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in by_root:
                by_root[r] = len(by_root)
            out[x] = by_root[r]
        return out


# Module-level aliases matching the operation names used across the package.
def dsu_find(d: DisjointSet, x: int) -> int:
    return d.find(x)


def dsu_union(d: DisjointSet, a: int, b: int) -> bool:
    return d.union(a, b)
