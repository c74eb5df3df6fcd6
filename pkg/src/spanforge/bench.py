"""Threads-vs-time benchmark over seeded random graphs."""

from __future__ import annotations

import logging
import statistics
import time
from dataclasses import dataclass

from .distributed import message_complexity, simulate_distributed_mst
from .graph import WeightedGraph, generate_random_graph
from .io import ALGORITHMS, ResultRecord
from .mst_parallel import parallel_boruvka
from .mst_seq import MstResult, boruvka, kruskal, prim

log = logging.getLogger(__name__)

PARALLEL_ALGORITHMS = ("parallel-boruvka", "parallel-boruvka2")


@dataclass(frozen=True)
class BenchPlan:
    sizes: tuple[int, ...] = (1000, 3000, 5000)
    edge_factor: int = 5  # m = edge_factor * n
    seeds: tuple[int, ...] = (1,)
    workers: tuple[int, ...] = (1, 2, 4, 8)
    algorithms: tuple[str, ...] = PARALLEL_ALGORITHMS
    repetitions: int = 5
    weight_range: tuple[float, float] = (1.0, 100.0)

    def validate(self) -> None:
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")
        if not self.workers or any(w < 1 for w in self.workers):
            raise ValueError(f"worker counts must all be >= 1, got {list(self.workers)}")
        if not self.sizes or not self.seeds or not self.algorithms:
            raise ValueError("plan needs at least one size, seed and algorithm")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {a!r}; choose from {', '.join(ALGORITHMS)}")
        for n in self.sizes:
            m = self.edge_factor * n
            if n < 1 or m < n - 1 or m > n * (n - 1) // 2:
                raise ValueError(f"size n={n} with m={m} is not a feasible connected simple graph")

    def worker_counts(self, algorithm: str) -> tuple[int, ...]:
        return self.workers if algorithm in PARALLEL_ALGORITHMS else (1,)


def run_algorithm(g: WeightedGraph, algorithm: str, workers: int = 1, start: int = 0):
    """Run one backend; returns (result, phase stats or None, trace or None)."""
    if algorithm == "kruskal":
        return kruskal(g), None, None
    if algorithm == "prim":
        return prim(g, start), None, None
    if algorithm == "boruvka":
        return boruvka(g), None, None
    if algorithm in PARALLEL_ALGORITHMS:
        result, phases = parallel_boruvka(g, workers, use_boruvka2=algorithm == "parallel-boruvka2")
        return result, phases, None
    if algorithm == "distributed":
        result, trace = simulate_distributed_mst(g)
        return result, None, trace
    raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")


def timed_run(g: WeightedGraph, algorithm: str, workers: int = 1, start: int = 0):
    t0 = time.perf_counter_ns()
    out = run_algorithm(g, algorithm, workers, start)
    return out, (time.perf_counter_ns() - t0) // 1000


def run_bench(plan: BenchPlan) -> tuple[list[ResultRecord], list[list]]:
    """Results rows (median time over repetitions) and per-phase rows."""
    plan.validate()
    records: list[ResultRecord] = []
    phase_rows: list[list] = []
    for n in plan.sizes:
        for seed in plan.seeds:
            g = generate_random_graph(n, plan.edge_factor * n, plan.weight_range, seed)
            for algorithm in plan.algorithms:
                for workers in plan.worker_counts(algorithm):
                    run_algorithm(g, algorithm, workers)  # warm-up, untimed
                    times, phase_times = [], []
                    result: MstResult | None = None
                    for _ in range(plan.repetitions):
                        (result, phases, trace), micros = timed_run(g, algorithm, workers)
                        times.append(micros)
                        if phases is not None:
                            phase_times.append([p.micros for p in phases])
                    messages = message_complexity(trace)[0] if trace is not None else None
                    med = int(statistics.median(times))
                    records.append(
                        ResultRecord(n, g.m, str(seed), algorithm, workers, result.total_weight,
                                     result.phase_count, med, messages)
                    )
                    if phases is not None:
                        for i, p in enumerate(phases):
                            pmed = int(statistics.median(t[i] for t in phase_times))
                            phase_rows.append([n, g.m, seed, algorithm, workers, p.phase,
                                               p.components_before, p.components_after, pmed])
                    log.info("n=%d seed=%s %s workers=%d: %d us", n, seed, algorithm, workers, med)
    return records, phase_rows
