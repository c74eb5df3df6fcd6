"""Edge-list graph files and result CSVs.

Graph files look like::

    c optional comments
    p <n> <m>
    e <u> <v> <weight>     (exactly m lines, 0-based vertices)

Weights are written with ``repr``, the shortest decimal that parses back
to the same double.
"""

from __future__ import annotations

import csv
import io
import math
import os
import tempfile
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Optional, Sequence, Union

from .graph import WeightedGraph, build_graph

ALGORITHMS = ("kruskal", "prim", "boruvka", "parallel-boruvka", "parallel-boruvka2", "distributed")

RESULTS_HEADER = ["n", "m", "seed", "algorithm", "workers", "total_weight", "phases", "micros", "messages"]
PHASE_HEADER = [
    "graph_n", "graph_m", "seed", "algorithm", "workers",
    "phase", "components_before", "components_after", "micros",
]

PathOrStream = Union[str, os.PathLike, IO[str]]


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@contextmanager
def _open(src: PathOrStream, mode: str):
    if isinstance(src, (str, os.PathLike)):
        with open(src, mode, encoding="ascii", newline="\n" if "w" in mode else None) as fh:
            yield fh
    else:
        yield src


def parse_graph(text: Iterable[str]) -> WeightedGraph:
    n = m = None
    lineno = 0
    triples: list[tuple[int, int, float]] = []
    for lineno, raw in enumerate(text, 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate 'p' line")
            if len(parts) != 3:
                raise ParseError(lineno, "expected 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, f"bad problem line {raw.strip()!r}") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "counts must be non-negative")
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "edge before 'p' line")
            if len(parts) != 4:
                raise ParseError(lineno, "expected 'e <u> <v> <w>'")
            try:
                u, v, w = int(parts[1]), int(parts[2]), float(parts[3])
            except ValueError:
                raise ParseError(lineno, f"bad edge line {raw.strip()!r}") from None
            if len(triples) == m:
                raise ParseError(lineno, f"more than the {m} edges declared")
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"endpoint out of range for n={n}: ({u}, {v})")
            if not math.isfinite(w) or w < 0:
                raise ParseError(lineno, f"weight must be finite and non-negative, got {parts[3]}")
            triples.append((u, v, w))
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(0, "missing 'p' line")
    if len(triples) != m:
        raise ParseError(lineno, f"header declares {m} edges, found {len(triples)}")
    return build_graph(n, triples)


def read_graph(src: PathOrStream) -> WeightedGraph:
    with _open(src, "r") as fh:
        return parse_graph(fh)


def format_graph(g: WeightedGraph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"e {e.u} {e.v} {e.weight!r}" for e in g.edges)
    return "\n".join(lines) + "\n"


def write_graph(g: WeightedGraph, sink: PathOrStream, comment: Optional[str] = None) -> None:
    with _open(sink, "w") as fh:
        fh.write(format_graph(g, comment))


@dataclass(frozen=True)
class ResultRecord:
    n: int
    m: int
    seed: str  # integer seed or the input file name
    algorithm: str
    workers: int
    total_weight: float
    phases: int
    micros: int
    messages: Optional[int] = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")

    def row(self) -> list[str]:
        return [
            str(self.n), str(self.m), str(self.seed), self.algorithm, str(self.workers),
            repr(float(self.total_weight)), str(self.phases), str(self.micros),
            "" if self.messages is None else str(self.messages),
        ]

    @classmethod
    def from_row(cls, row: Sequence[str]) -> "ResultRecord":
        n, m, seed, algo, workers, total, phases, micros, messages = row
        return cls(
            int(n), int(m), seed, algo, int(workers), float(total), int(phases), int(micros),
            int(messages) if messages else None,
        )


def write_results(records: Iterable[ResultRecord], sink: PathOrStream) -> None:
    with _open(sink, "w") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RESULTS_HEADER)
        for r in records:
            w.writerow(r.row())


def read_results(src: PathOrStream) -> list[ResultRecord]:
    with _open(src, "r") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != RESULTS_HEADER:
        raise ParseError(1, "missing or wrong results header")
    return [ResultRecord.from_row(r) for r in rows[1:]]


def write_phase_stats(rows: Iterable[Sequence], sink: PathOrStream) -> None:
    with _open(sink, "w") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(PHASE_HEADER)
        w.writerows(rows)


def results_to_text(records: Iterable[ResultRecord]) -> str:
    buf = io.StringIO()
    write_results(records, buf)
    return buf.getvalue()


def phase_stats_to_text(rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    write_phase_stats(rows, buf)
    return buf.getvalue()


def atomic_write_text(path: Union[str, os.PathLike], text: str) -> None:
    """Write via a temporary file in the same directory, then rename into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise
