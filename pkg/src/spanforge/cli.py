"""Command-line front end: gen, mst, bench, amdahl, trust."""

from __future__ import annotations

import logging
import sys

import click

from . import io as gio
from .bench import BenchPlan, run_bench, timed_run
from .graph import GraphError, generate_random_graph
from .io import ALGORITHMS, ParseError, ResultRecord
from .perf import AmdahlParams, amdahl_max_efficiency, amdahl_max_speedup, rounded
from .trust import TrustError, TrustPath, trust_value

_FAILURES = (GraphError, ParseError, TrustError, ValueError, OSError)


def _int_list(ctx, param, value):
    if value is None:
        return None
    try:
        return tuple(int(x) for x in value.split(",") if x.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _float_list(ctx, param, value):
    try:
        return tuple(float(x) for x in value.split(",") if x.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose):
    """Minimum spanning tree backends, benchmark harness and small calculators."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(message)s")


@main.command()
@click.option("-n", "n", type=int, required=True, help="Vertex count.")
@click.option("-m", "m", type=int, required=True, help="Edge count (n-1 <= m <= n(n-1)/2).")
@click.option("--lo", type=float, default=1.0, show_default=True, help="Lowest weight.")
@click.option("--hi", type=float, default=100.0, show_default=True, help="Weight upper bound (exclusive).")
@click.option("--seed", type=int, default=1, show_default=True, envvar="SPANFORGE_SEED",
              help="PRNG seed (env SPANFORGE_SEED).")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default="-", show_default=True,
              help="Output file; '-' for stdout.")
def gen(n, m, lo, hi, seed, output):
    """Generate a seeded connected random graph in edge-list format."""
    try:
        g = generate_random_graph(n, m, (lo, hi), seed)
        text = gio.format_graph(g, comment=f"random graph n={n} m={m} seed={seed} weights=[{lo!r},{hi!r})")
        if output == "-":
            click.echo(text, nl=False)
        else:
            gio.atomic_write_text(output, text)
    except _FAILURES as exc:
        raise click.ClickException(str(exc))


@main.command()
@click.argument("input", type=click.Path(dir_okay=False))
@click.option("--algo", type=click.Choice(ALGORITHMS), default="kruskal", show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True,
              help="Worker threads for the parallel backends.")
@click.option("--start", type=int, default=0, show_default=True, help="Start vertex for prim.")
@click.option("--trace", is_flag=True, help="Print the per-phase merge edges (distributed only).")
@click.option("--results", type=click.Path(dir_okay=False), default=None,
              help="Also write a one-row results CSV here.")
def mst(input, algo, workers, start, trace, results):
    """Compute a minimum spanning tree/forest of INPUT.

    The micros line is the only timing-dependent output.
    """
    if trace and algo != "distributed":
        raise click.UsageError("--trace is only available with --algo distributed")
    try:
        g = gio.read_graph(input)
        (result, _, rtrace), micros = timed_run(g, algo, workers, start)
    except _FAILURES as exc:
        raise click.ClickException(str(exc))
    messages = len(rtrace.envelopes) if rtrace is not None else None
    click.echo(f"algorithm: {algo}")
    click.echo(f"n: {g.n}")
    click.echo(f"m: {g.m}")
    click.echo(f"workers: {workers}")
    click.echo(f"total_weight: {result.total_weight!r}")
    click.echo(f"phases: {result.phase_count}")
    click.echo(f"edges: {' '.join(map(str, result.sorted_edges()))}")
    if messages is not None:
        click.echo(f"messages: {messages}")
    if trace:
        click.echo(rtrace.to_text(), nl=False)
    click.echo(f"micros: {micros}")
    if results:
        record = ResultRecord(g.n, g.m, input, algo, workers, result.total_weight,
                              result.phase_count, micros, messages)
        try:
            gio.atomic_write_text(results, gio.results_to_text([record]))
        except OSError as exc:
            raise click.ClickException(str(exc))


@main.command()
@click.option("--sizes", callback=_int_list, default="1000,3000,5000", show_default=True,
              help="Comma-separated vertex counts.")
@click.option("--edge-factor", type=int, default=5, show_default=True, help="Edges per vertex (m = factor * n).")
@click.option("--seeds", callback=_int_list, default=None, envvar="SPANFORGE_SEED",
              help="Comma-separated seeds [default: 1, or SPANFORGE_SEED].")
@click.option("--workers", callback=_int_list, default="1,2,4,8", show_default=True,
              help="Comma-separated worker counts.")
@click.option("--algos", default="parallel-boruvka,parallel-boruvka2", show_default=True,
              help=f"Comma-separated algorithms from: {', '.join(ALGORITHMS)}.")
@click.option("--reps", type=int, default=5, show_default=True, help="Timed repetitions per configuration.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True, help="Results CSV path.")
@click.option("--phases", "phases_out", type=click.Path(dir_okay=False), default=None,
              help="Optional per-phase CSV path.")
def bench(sizes, edge_factor, seeds, workers, algos, reps, output, phases_out):
    """Time the backends over seeded graphs and write median results as CSV."""
    plan = BenchPlan(
        sizes=sizes,
        edge_factor=edge_factor,
        seeds=seeds or (1,),
        workers=workers,
        algorithms=tuple(a.strip() for a in algos.split(",") if a.strip()),
        repetitions=reps,
    )
    try:
        plan.validate()
        records, phase_rows = run_bench(plan)
        gio.atomic_write_text(output, gio.results_to_text(records))
        if phases_out:
            gio.atomic_write_text(phases_out, gio.phase_stats_to_text(phase_rows))
    except _FAILURES as exc:
        raise click.ClickException(str(exc))
    click.echo(f"wrote {len(records)} rows to {output}")


@main.command()
@click.option("-f", "f", type=float, required=True, help="Serial fraction in [0, 1].")
@click.option("-p", "P", type=int, required=True, help="Processor count (>= 1).")
@click.option("--digits", type=click.IntRange(min=0), default=3, show_default=True)
def amdahl(f, P, digits):
    """Maximum speedup and efficiency under Amdahl's law."""
    try:
        params = AmdahlParams(f, P)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    s = rounded(amdahl_max_speedup(params), digits)
    e = rounded(amdahl_max_efficiency(params), digits)
    click.echo(f"speedup {s:.{digits}f}, efficiency {e:.{digits}f}")


@main.command()
@click.option("--rtv", callback=_float_list, default="", show_default=True,
              help="Comma-separated recommender trust values in [0, 4].")
@click.option("--tv", type=float, required=True, help="Target trust value in [0, 4].")
def trust(rtv, tv):
    """Trust in a target reached through a chain of recommenders."""
    try:
        value = trust_value(TrustPath(rtv, tv))
    except TrustError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"{value:.4f}")


if __name__ == "__main__":
    sys.exit(main())
