"""Phase-parallel Borůvka and the two-step Boruvka2 contraction.

Every level of the computation is a compact multigraph whose edge arrays
are kept sorted by the original (weight, id) key. Because contraction only
filters those arrays, the position of an edge within a level is its rank
in the global edge order, and "lightest incident edge" reduces to
"smallest incident position". Each phase:

1. workers scan disjoint vertex ranges of the level's CSR adjacency and
   write per-vertex minima into private buffers;
2. after the barrier, a single thread merges the buffers, hooks every
   vertex to the far end of its chosen edge, breaks the mutual pairs and
   pointer-jumps to roots;
3. endpoints are relabelled and self-loops dropped to form the next level.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Union

import numpy as np

from .graph import Edge, WeightedGraph
from .mst_seq import MstResult

_NO_EDGE = np.iinfo(np.int64).max

_pools: dict[int, ThreadPoolExecutor] = {}
_pools_lock = threading.Lock()


def _pool(workers: int) -> ThreadPoolExecutor:
    with _pools_lock:
        pool = _pools.get(workers)
        if pool is None:
            pool = _pools[workers] = ThreadPoolExecutor(workers, thread_name_prefix="boruvka")
        return pool


@dataclass(frozen=True)
class ContractionStep:
    """Result of contracting a forest ``F`` out of a graph.

    ``vertex_map`` sends each input vertex to its vertex in ``contracted``.
    ``original_ids[k]`` is the id, in the graph the whole computation
    started from, of edge ``k`` of ``contracted``.
    """

    forest_edges: frozenset[int]
    vertex_map: tuple[int, ...]
    contracted: WeightedGraph
    original_ids: tuple[int, ...]


@dataclass(frozen=True)
class PhaseStats:
    phase: int
    components_before: int
    components_after: int
    edges_scanned: int
    micros: int
    workers: int


class _Level:
    """Compact multigraph with edges sorted by global rank."""

    __slots__ = ("n", "src", "dst", "orig", "indptr", "adj")

    def __init__(self, n: int, src: np.ndarray, dst: np.ndarray, orig: np.ndarray):
        self.n = n
        self.src = src
        self.dst = dst
        self.orig = orig
        m = len(src)
        ends = np.concatenate((src, dst))
        pos = np.concatenate((np.arange(m, dtype=np.int64),) * 2)
        order = np.argsort(ends, kind="stable")
        self.adj = pos[order]
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(ends, minlength=n), out=self.indptr[1:])

    @property
    def m(self) -> int:
        return len(self.src)

    @classmethod
    def from_graph(cls, g: WeightedGraph, original_ids=None) -> "_Level":
        u, v, w = g.arrays()
        ids = np.arange(g.m, dtype=np.int64) if original_ids is None else np.asarray(original_ids, dtype=np.int64)
        order = np.lexsort((ids, w))
        return cls(g.n, u[order], v[order], ids[order])


def _scan_range(level: _Level, lo: int, hi: int, out: np.ndarray) -> int:
    """Per-vertex minimum incident edge position for vertices ``lo .. hi-1``."""
    if lo >= hi:
        return 0
    start, stop = level.indptr[lo], level.indptr[hi]
    if start == stop:
        out[:] = _NO_EDGE
        return 0
    offsets = level.indptr[lo:hi] - start
    seg = level.adj[start:stop]
    mins = np.minimum.reduceat(seg, np.minimum(offsets, len(seg) - 1))
    empty = level.indptr[lo + 1 : hi + 1] == level.indptr[lo:hi]
    mins[empty] = _NO_EDGE
    out[:] = mins
    return int(stop - start)


def _vertex_ranges(level: _Level, workers: int) -> list[tuple[int, int]]:
    # split so each worker sees roughly the same number of adjacency entries
    targets = np.linspace(0, level.indptr[-1], workers + 1)
    cuts = np.searchsorted(level.indptr, targets, side="left")
    cuts[0], cuts[-1] = 0, level.n
    cuts = np.maximum.accumulate(np.minimum(cuts, level.n))
    return [(int(cuts[i]), int(cuts[i + 1])) for i in range(workers)]


def _select(level: _Level, workers: int) -> tuple[np.ndarray, int]:
    ranges = _vertex_ranges(level, workers)
    buffers = [np.empty(hi - lo, dtype=np.int64) for lo, hi in ranges]
    if workers == 1:
        scanned = _scan_range(level, 0, level.n, buffers[0])
    else:
        pool = _pool(workers)
        futures = [pool.submit(_scan_range, level, lo, hi, buf) for (lo, hi), buf in zip(ranges, buffers)]
        scanned = sum(f.result() for f in futures)  # barrier
    return np.concatenate(buffers) if buffers else np.empty(0, dtype=np.int64), scanned


def _contract(level: _Level, best: np.ndarray) -> tuple[np.ndarray, np.ndarray, _Level]:
    """Merge selections, returning (chosen level positions, vertex map, next level)."""
    n = level.n
    has = best != _NO_EDGE
    chosen = np.unique(best[has])
    parent = np.arange(n, dtype=np.int64)
    if chosen.size:
        verts = np.nonzero(has)[0]
        e = best[has]
        far = np.where(level.src[e] == verts, level.dst[e], level.src[e])
        parent[verts] = far
        # under a strict edge order the only cycles are mutual pairs; the
        # smaller vertex of each pair becomes the root
        mutual = (parent[parent] == np.arange(n)) & (np.arange(n) < parent)
        parent[mutual] = np.nonzero(mutual)[0]
        while True:
            nxt = parent[parent]
            if np.array_equal(nxt, parent):
                break
            parent = nxt
    roots, vertex_map = np.unique(parent, return_inverse=True)
    ns, nd = vertex_map[level.src], vertex_map[level.dst]
    keep = ns != nd
    nxt_level = _Level(len(roots), ns[keep], nd[keep], level.orig[keep])
    return chosen, vertex_map, nxt_level


def _materialize(level: _Level, weights: np.ndarray) -> tuple[WeightedGraph, tuple[int, ...]]:
    order = np.argsort(level.orig, kind="stable")
    orig = level.orig[order]
    edges = [
        Edge(k, int(a), int(b), float(weights[o]))
        for k, (a, b, o) in enumerate(zip(level.src[order], level.dst[order], orig))
    ]
    return WeightedGraph(level.n, edges), tuple(int(o) for o in orig)


GraphOrStep = Union[WeightedGraph, ContractionStep]


def _as_level(g: GraphOrStep) -> tuple[_Level, np.ndarray]:
    if isinstance(g, ContractionStep):
        _, _, w = g.contracted.arrays()
        level = _Level.from_graph(g.contracted, g.original_ids)
        # weights indexed by original id
        full = np.zeros(int(level.orig.max()) + 1 if level.m else 0)
        full[np.asarray(g.original_ids, dtype=np.int64)] = w
        return level, full
    return _Level.from_graph(g), g.arrays()[2]


def boruvka_step(g: GraphOrStep) -> ContractionStep:
    """One Borůvka step: pick every vertex's lightest edge and contract them.

    Accepts a graph or the output of a previous step; in the latter case
    the returned ids and vertex map refer to that step's contracted graph
    vertices and to the original edge ids.
    """
    level, weights = _as_level(g)
    best, _ = _select(level, 1)
    chosen, vmap, nxt = _contract(level, best)
    contracted, ids = _materialize(nxt, weights)
    forest = frozenset(int(x) for x in level.orig[chosen])
    return ContractionStep(forest, tuple(int(x) for x in vmap), contracted, ids)


def boruvka2(g: WeightedGraph) -> ContractionStep:
    """Two Borůvka steps; F is the union of both forests, vertex map composed."""
    first = boruvka_step(g)
    second = boruvka_step(first)
    vmap = tuple(second.vertex_map[x] for x in first.vertex_map)
    return ContractionStep(first.forest_edges | second.forest_edges, vmap, second.contracted, second.original_ids)


def parallel_boruvka(
    g: WeightedGraph, workers: int = 1, use_boruvka2: bool = False
) -> tuple[MstResult, list[PhaseStats]]:
    """Minimum spanning forest with the per-vertex scan split over ``workers`` threads.

    With ``use_boruvka2`` each phase runs two Borůvka steps back to back,
    so a phase cuts the component count to at most a quarter.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    level = _Level.from_graph(g)
    steps_per_phase = 2 if use_boruvka2 else 1
    forest: list[np.ndarray] = []
    phases: list[PhaseStats] = []
    scanned_total = 0
    while level.m:
        t0 = time.perf_counter_ns()
        before = level.n
        scanned = 0
        for _ in range(steps_per_phase):
            if not level.m:
                break
            best, s = _select(level, workers)
            chosen, _, nxt = _contract(level, best)
            forest.append(level.orig[chosen])
            scanned += s
            level = nxt
        micros = (time.perf_counter_ns() - t0) // 1000
        scanned_total += scanned
        phases.append(PhaseStats(len(phases) + 1, before, level.n, scanned, micros, workers))
    edges = np.concatenate(forest).tolist() if forest else []
    stats = {"edges_scanned": scanned_total, "workers": workers}
    return MstResult.from_edges(g, edges, len(phases), stats), phases
