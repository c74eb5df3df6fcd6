"""Synchronous message-passing simulation of fragment-merging MST construction.

Each vertex is a process that only knows its incident edges. Processes
talk over graph edges, and the scheduler delivers every message sent in
round r before round r+1 starts. A phase has four stages:

* neighbor notice (phases after the first): every process tells each
  neighbor outside its tree which fragment it now belongs to;
* convergecast: candidates for the lightest outgoing edge flow up the
  fragment tree to the leader, each Report carrying the best seen so far;
* merge: the leader routes Merge(edge) down to the endpoint owning the
  winning edge, which sends it across to the other fragment;
* rebroadcast: merged fragments are united, and the smallest member floods
  FragmentUpdate(new id) over the tree, which also fixes parent pointers.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .graph import DisjointSet, GraphError, WeightedGraph, connected_components
from .mst_seq import MstResult


@dataclass(frozen=True)
class Report:
    candidate: Optional[tuple[float, int]]  # (weight, edge id) or None


@dataclass(frozen=True)
class Merge:
    edge_id: int


@dataclass(frozen=True)
class FragmentUpdate:
    fragment: int


Payload = Union[Report, Merge, FragmentUpdate]
_TAG = {Report: 0, Merge: 1, FragmentUpdate: 2}


class Envelope(NamedTuple):
    src: int
    dst: int
    round: int
    phase: int
    payload: Payload


class MergeEdge(NamedTuple):
    """A tree edge added in ``phase``; ``u`` is the side whose fragment chose it."""

    u: int
    v: int
    phase: int
    edge_id: int


@dataclass
class NodeProcess:
    id: int
    fragment: int
    adjacency: tuple[tuple[int, int, float], ...]
    parent: Optional[int] = None
    tree: set[tuple[int, int]] = field(default_factory=set)  # (neighbor, edge id)
    neighbor_fragment: dict[int, int] = field(default_factory=dict)
    # phase-local scratch
    best: Optional[tuple[float, int]] = None
    best_via: Optional[int] = None
    waiting: int = 0
    reported: bool = False

    def tree_neighbors(self) -> list[int]:
        return sorted({y for y, _ in self.tree})

    def children(self) -> list[int]:
        return [y for y in self.tree_neighbors() if y != self.parent]

    def local_candidate(self) -> Optional[tuple[float, int]]:
        best = None
        for y, eid, w in self.adjacency:
            if self.neighbor_fragment[y] != self.fragment:
                key = (w, eid)
                if best is None or key < best:
                    best = key
        return best


@dataclass(frozen=True)
class PhaseRecord:
    phase: int
    merges: tuple[MergeEdge, ...]
    fragments_before: int
    fragments_after: int
    messages: int
    rounds: int
    fragment_ids: tuple[int, ...]  # per vertex, at the end of the phase


@dataclass(frozen=True)
class RoundTrace:
    phases: tuple[PhaseRecord, ...]
    envelopes: tuple[Envelope, ...]

    @property
    def phase_count(self) -> int:
        return len(self.phases)

    def to_text(self) -> str:
        lines = []
        for p in self.phases:
            marks = " ".join(f"({m.u},{m.v},{m.phase})" for m in p.merges)
            lines.append(f"phase {p.phase}: {marks}")
        return "\n".join(lines) + ("\n" if lines else "")

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["phase", "edge_u", "edge_v", "fragments_before", "fragments_after", "messages"])
        for p in self.phases:
            for m in p.merges:
                w.writerow([p.phase, m.u, m.v, p.fragments_before, p.fragments_after, p.messages])
        return buf.getvalue()


class _Network:
    def __init__(self, g: WeightedGraph):
        self.g = g
        self.nodes = [
            NodeProcess(
                x,
                x,
                tuple((y, eid, g.edges[eid].weight) for y, eid in g.neighbors(x)),
                neighbor_fragment={y: y for y, _ in g.neighbors(x)},
            )
            for x in range(g.n)
        ]
        self.adjacent = [{y for y, _ in g.neighbors(x)} for x in range(g.n)]
        self.round = 0
        self.phase = 0
        self.log: list[Envelope] = []
        self._outbox: list[Envelope] = []

    def send(self, src: int, dst: int, payload: Payload) -> None:
        if dst not in self.adjacent[src]:
            raise RuntimeError(f"no channel between {src} and {dst}")
        self._outbox.append(Envelope(src, dst, self.round, self.phase, payload))

    def deliver(self) -> list[Envelope]:
        """End the current round; returns its messages in delivery order."""
        batch = sorted(self._outbox, key=lambda e: (e.src, e.dst, _TAG[type(e.payload)]))
        self._outbox = []
        self.log.extend(batch)
        self.round += 1
        return batch

    def pending(self) -> bool:
        return bool(self._outbox)


def _notify_neighbors(net: _Network) -> None:
    for node in net.nodes:
        tree_nbrs = set(node.tree_neighbors())
        for y in sorted(node.neighbor_fragment):
            if y in tree_nbrs:
                node.neighbor_fragment[y] = node.fragment
            else:
                net.send(node.id, y, FragmentUpdate(node.fragment))
    for env in net.deliver():
        net.nodes[env.dst].neighbor_fragment[env.src] = env.payload.fragment


def _convergecast(net: _Network) -> None:
    for node in net.nodes:
        node.best = node.local_candidate()
        node.best_via = node.id if node.best is not None else None
        node.waiting = len(node.children())
        node.reported = False
    while True:
        for node in net.nodes:
            if node.parent is not None and not node.reported and node.waiting == 0:
                net.send(node.id, node.parent, Report(node.best))
                node.reported = True
        if not net.pending():
            return
        for env in net.deliver():
            node = net.nodes[env.dst]
            cand = env.payload.candidate
            if cand is not None and (node.best is None or cand < node.best):
                node.best, node.best_via = cand, env.src
            node.waiting -= 1


def _route_merges(net: _Network, merges: dict[int, MergeEdge]) -> None:
    g = net.g

    def forward(node: NodeProcess, eid: int) -> None:
        if node.best_via == node.id:
            e = g.edges[eid]
            other = e.other(node.id)
            node.tree.add((other, eid))
            net.send(node.id, other, Merge(eid))
            if eid not in merges or node.id < merges[eid].u:
                merges[eid] = MergeEdge(node.id, other, net.phase, eid)
        else:
            net.send(node.id, node.best_via, Merge(eid))

    for node in net.nodes:
        if node.parent is None and node.best is not None:
            forward(node, node.best[1])
    while net.pending():
        for env in net.deliver():
            node = net.nodes[env.dst]
            eid = env.payload.edge_id
            e = g.edges[eid]
            if node.id in (e.u, e.v) and e.other(node.id) == env.src:
                node.tree.add((env.src, eid))
            else:
                forward(node, eid)


def _rebroadcast(net: _Network) -> int:
    dsu = DisjointSet(len(net.nodes))
    for node in net.nodes:
        for y, _ in node.tree:
            dsu.union(node.id, y)
    leaders: dict[int, int] = {}
    for x in range(len(net.nodes)):
        leaders.setdefault(dsu.find(x), x)
    for leader in sorted(leaders.values()):
        node = net.nodes[leader]
        node.fragment, node.parent = leader, None
        for y in node.tree_neighbors():
            net.send(leader, y, FragmentUpdate(leader))
    while net.pending():
        for env in net.deliver():
            node = net.nodes[env.dst]
            node.fragment = env.payload.fragment
            node.parent = env.src
            for y in node.children():
                net.send(node.id, y, FragmentUpdate(node.fragment))
    return len(leaders)


def simulate_distributed_mst(g: WeightedGraph) -> tuple[MstResult, RoundTrace]:
    """Run the simulation on a connected graph until a single fragment remains."""
    labels, k = connected_components(g)
    if k > 1:
        comps: dict[int, list[int]] = {}
        for x, c in enumerate(labels):
            comps.setdefault(c, []).append(x)
        desc = "; ".join(
            "{" + ", ".join(map(str, members[:5])) + (", ..." if len(members) > 5 else "") + "}"
            for members in comps.values()
        )
        raise GraphError(f"graph is disconnected ({k} components): {desc}")

    net = _Network(g)
    records: list[PhaseRecord] = []
    fragments = g.n
    while fragments > 1:
        net.phase += 1
        start_msgs, start_round = len(net.log), net.round
        if net.phase > 1:
            _notify_neighbors(net)
        _convergecast(net)
        merges: dict[int, MergeEdge] = {}
        _route_merges(net, merges)
        after = _rebroadcast(net)
        records.append(
            PhaseRecord(
                net.phase,
                tuple(sorted(merges.values(), key=lambda m: m.edge_id)),
                fragments,
                after,
                len(net.log) - start_msgs,
                net.round - start_round,
                tuple(node.fragment for node in net.nodes),
            )
        )
        fragments = after

    trace = RoundTrace(tuple(records), tuple(net.log))
    chosen = [m.edge_id for p in records for m in p.merges]
    stats = {"messages": len(net.log), "rounds": net.round}
    return MstResult.from_edges(g, chosen, len(records), stats), trace


def trace_phase_edges(trace: RoundTrace) -> list[frozenset[MergeEdge]]:
    return [frozenset(p.merges) for p in trace.phases]


def message_complexity(trace: RoundTrace) -> tuple[int, list[int]]:
    """Total message count and the per-phase breakdown, both from the envelope log."""
    per_phase = [0] * len(trace.phases)
    for env in trace.envelopes:
        per_phase[env.phase - 1] += 1
    return sum(per_phase), per_phase
