"""Minimum spanning tree algorithms: sequential, phase-parallel and simulated distributed."""

from .graph import DisjointSet, Edge, EdgeKey, GraphError, WeightedGraph, build_graph, connected_components, generate_random_graph
from .mst_seq import MstResult, boruvka, brute_force_mst, kruskal, prim
from .mst_parallel import ContractionStep, PhaseStats, boruvka2, boruvka_step, parallel_boruvka
from .distributed import RoundTrace, message_complexity, simulate_distributed_mst, trace_phase_edges
from .perf import AmdahlParams, Measurement, amdahl_max_efficiency, amdahl_max_speedup, efficiency, speedup
from .trust import TrustPath, compose_paths, trust_value

__version__ = "0.1.0"
