import math
from collections import Counter

import pytest

from spanforge.distributed import (
    FragmentUpdate,
    Merge,
    MergeEdge,
    Report,
    message_complexity,
    simulate_distributed_mst,
    trace_phase_edges,
)
from spanforge.graph import DisjointSet, GraphError, build_graph, generate_random_graph
from spanforge.mst_seq import boruvka, brute_force_mst, kruskal

from conftest import small_connected_graph


def kinds(trace, phase):
    return Counter(type(e.payload).__name__ for e in trace.envelopes if e.phase == phase)


def test_two_vertices():
    r, trace = simulate_distributed_mst(build_graph(2, [(0, 1, 1.0)]))
    assert r.edges == {0} and r.phase_count == 1
    assert trace_phase_edges(trace) == [frozenset({MergeEdge(0, 1, 1, 0)})]
    # both singleton leaders send Merge across the edge, then leader 0 tells 1
    assert kinds(trace, 1) == {"Merge": 2, "FragmentUpdate": 1}
    assert message_complexity(trace) == (3, [3])
    assert trace.to_text() == "phase 1: (0,1,1)\n"


def test_single_vertex_has_no_phases():
    r, trace = simulate_distributed_mst(build_graph(1, []))
    assert r.edges == frozenset() and trace.phases == ()
    assert message_complexity(trace) == (0, [])


def test_path4_single_phase(path4):
    r, trace = simulate_distributed_mst(path4)
    # minima: 0->e0, 1->e0, 2->e1, 3->e2; all three edges join in phase 1
    assert trace_phase_edges(trace) == [frozenset({MergeEdge(0, 1, 1, 0), MergeEdge(2, 1, 1, 1), MergeEdge(3, 2, 1, 2)})]
    # 4 Merges (one per singleton) plus 3 FragmentUpdates down the new path
    assert message_complexity(trace) == (7, [7])
    assert r.edges == {0, 1, 2}


def test_two_phase_hand_run():
    # phase 1 forms {0,1} and {2,3}; phase 2 joins them over the weight-3 edge
    g = build_graph(4, [(0, 1, 1.0), (1, 2, 3.0), (2, 3, 1.0)])
    r, trace = simulate_distributed_mst(g)
    assert r.phase_count == 2
    assert trace.to_text() == "phase 1: (0,1,1) (2,3,1)\nphase 2: (1,2,2)\n"
    assert kinds(trace, 1) == {"Merge": 4, "FragmentUpdate": 2}
    # notices 1->2, 2->1; reports 1->0, 3->2; Merge 0->1, 1->2, 2->1; flood 0->1->2->3
    assert kinds(trace, 2) == {"FragmentUpdate": 5, "Report": 2, "Merge": 3}
    assert message_complexity(trace) == (16, [6, 10])
    p1, p2 = trace.phases
    assert (p1.fragments_before, p1.fragments_after, p2.fragments_after) == (4, 2, 1)
    assert p2.fragment_ids == (0, 0, 0, 0)


def test_disconnected_rejected_with_components():
    with pytest.raises(GraphError, match=r"2 components\): \{0, 1\}; \{2, 3\}"):
        simulate_distributed_mst(build_graph(4, [(0, 1, 1.0), (2, 3, 1.0)]))


def test_seven_vertices_within_three_phases():
    for seed in range(50):
        g = generate_random_graph(7, 11, (1, 100), seed)
        r, trace = simulate_distributed_mst(g)
        assert r.phase_count <= 3
        assert r.edges == kruskal(g).edges


def test_n32_matches_kruskal_and_is_deterministic():
    g = generate_random_graph(32, 100, (1, 100), 5)
    r, trace = simulate_distributed_mst(g)
    r2, trace2 = simulate_distributed_mst(g)
    assert r.edges == kruskal(g).edges == boruvka(g).edges
    assert message_complexity(trace) == message_complexity(trace2)
    assert trace.envelopes == trace2.envelopes


def test_oracle_small_graphs():
    for seed in range(80):
        g = small_connected_graph(seed)
        assert simulate_distributed_mst(g)[0].edges == brute_force_mst(g).edges


@pytest.mark.parametrize("seed", range(10))
def test_protocol_invariants(seed):
    n = [7, 20, 64, 100, 150][seed % 5]
    g = generate_random_graph(n, min(n * (n - 1) // 2, 3 * n), (1, 10), seed)
    r, trace = simulate_distributed_mst(g)
    assert r.phase_count <= math.ceil(math.log2(n))

    phase_sets = trace_phase_edges(trace)
    ids = [m.edge_id for s in phase_sets for m in s]
    assert len(ids) == len(set(ids))  # phases are disjoint
    assert set(ids) == r.edges
    for k, s in enumerate(phase_sets, 1):
        assert all(m.phase == k for m in s)

    adjacent = {(e.u, e.v) for e in g.edges} | {(e.v, e.u) for e in g.edges}
    assert all((env.src, env.dst) in adjacent for env in trace.envelopes)

    total, per_phase = message_complexity(trace)
    assert total == len(trace.envelopes) == sum(p.messages for p in trace.phases)
    assert per_phase == [p.messages for p in trace.phases]

    tree = set()
    dsu = DisjointSet(n)
    for p, s in zip(trace.phases, phase_sets):
        # Reports only travel over edges chosen in earlier phases
        tree_pairs = {(g.edges[i].u, g.edges[i].v) for i in tree} | {(g.edges[i].v, g.edges[i].u) for i in tree}
        for env in trace.envelopes:
            if env.phase == p.phase and isinstance(env.payload, Report):
                assert (env.src, env.dst) in tree_pairs
        for m in s:
            tree.add(m.edge_id)
            dsu.union(m.u, m.v)
        expected = [min(x for x in range(n) if dsu.connected(x, y)) for y in range(n)]
        assert list(p.fragment_ids) == expected
        if p.fragments_before > 1:
            assert p.fragments_after <= p.fragments_before // 2


def test_csv_export():
    g = build_graph(4, [(0, 1, 1.0), (1, 2, 3.0), (2, 3, 1.0)])
    _, trace = simulate_distributed_mst(g)
    assert trace.to_csv().splitlines() == [
        "phase,edge_u,edge_v,fragments_before,fragments_after,messages",
        "1,0,1,4,2,6",
        "1,2,3,4,2,6",
        "2,1,2,2,1,10",
    ]


def test_payload_types_used():
    _, trace = simulate_distributed_mst(generate_random_graph(50, 150, (1, 10), 2))
    assert {type(e.payload) for e in trace.envelopes} == {Report, Merge, FragmentUpdate}
