"""Command-line pipelines over the library modules.

Exit codes: 0 success, 2 usage/validation error, 3 data error, 4 internal
error. Every file-writing command drops a JSON run manifest next to each
output; manifests are the only outputs allowed to differ between reruns
(wall time), all primary outputs are byte-reproducible for fixed seeds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, io
from .cluster import LabeledDataset, adj_cluster, purity, run_trials, top_cluster
from .connectome import build_connectome
from .graphgen import ModularSpec, bench_distance, gen_modular
from .homology import WeightedGraph, graph_persistence
from .plotting import render_persistence_svg
from .wasserstein import (
    barycenter,
    combined_sq_distance,
    variance,
    wasserstein_births,
    wasserstein_deaths,
    _check_aligned,
)

USAGE_ERROR = 2
DATA_ERROR = 3
INTERNAL_ERROR = 4


def _default_threads() -> int:
    env = os.environ.get("TOPOFC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _write_manifest(output, command, inputs, outputs, params, wall_time):
    doc = {
        "command": command,
        "inputs": [str(p) for p in inputs],
        "outputs": [str(p) for p in outputs],
        "parameters": params,
        "version": __version__,
        "wall_time_s": wall_time,
    }
    Path(str(output) + ".manifest.json").write_text(json.dumps(doc) + "\n")


def _manifests(command, args_start, inputs, outputs, params):
    wall = time.perf_counter() - args_start
    for out in outputs:
        _write_manifest(out, command, inputs, outputs, params, wall)


def _read_activations(path: str):
    if path.endswith(".csv"):
        return io.read_activations_csv(path)
    return io.read_activations_bin(path)


def _parse_p(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return float("inf")
    return float(text)


def _cmd_connectome(args) -> int:
    t0 = time.perf_counter()
    acts = _read_activations(args.input)
    conn = build_connectome(acts)
    io.write_connectome(args.output, conn)
    _manifests("connectome", t0, [args.input], [args.output], {})
    return 0


def _cmd_persistence(args) -> int:
    t0 = time.perf_counter()
    conn = io.read_connectome(args.input)
    pers = graph_persistence(WeightedGraph.from_dense(conn.weights))
    io.write_persistence(args.output, pers)
    _manifests("persistence", t0, [args.input], [args.output], {})
    return 0


def _cmd_distance(args) -> int:
    t0 = time.perf_counter()
    a = io.read_persistence(args.a)
    b = io.read_persistence(args.b)
    wb = wasserstein_births(a, b, args.p)
    wd = wasserstein_deaths(a, b, args.p)
    c2 = combined_sq_distance(a, b)
    print(f"{wb!r} {wd!r} {c2!r}")
    if args.output:
        doc = {"p": args.p, "w_births": wb, "w_deaths": wd, "combined_sq": c2}
        Path(args.output).write_text(json.dumps(doc) + "\n")
        _manifests(
            "distance", t0, [args.a, args.b], [args.output], {"p": args.p}
        )
    return 0


def _cmd_barycenter(args) -> int:
    t0 = time.perf_counter()
    items = [io.read_persistence(p) for p in args.inputs]
    center = barycenter(items)
    doc = {
        "n_nodes": center.n_nodes,
        "n_inputs": center.n_inputs,
        "mean_births": [float(x) for x in center.mean_births],
        "mean_deaths": [float(x) for x in center.mean_deaths],
    }
    Path(args.output).write_text(json.dumps(doc) + "\n")
    _manifests("barycenter", t0, args.inputs, [args.output], {})
    return 0


def _cmd_variance(args) -> int:
    t0 = time.perf_counter()
    items = [io.read_persistence(p) for p in args.inputs]
    var = variance(items)
    doc = {
        "n_inputs": len(items),
        "var_births": var.var_births,
        "var_deaths": var.var_deaths,
    }
    text = json.dumps(doc) + "\n"
    if args.output:
        Path(args.output).write_text(text)
        _manifests("variance", t0, args.inputs, [args.output], {})
    else:
        sys.stdout.write(text)
    return 0


def _cmd_cluster(args) -> int:
    t0 = time.perf_counter()
    if args.method == "top":
        items = [io.read_persistence(p) for p in args.inputs]
        _check_aligned(items)
    else:
        items = [io.read_connectome(p) for p in args.inputs]
    labels = io.read_labels(args.labels) if args.labels else None
    if labels is not None and len(labels) != len(items):
        raise ValueError(
            f"{len(labels)} labels for {len(items)} inputs"
        )
    data = LabeledDataset(items, labels)

    if labels is not None:
        summary = run_trials(
            data, args.k, args.trials, args.seed,
            method=args.method, n_threads=args.threads,
        )
        results = summary.results
    else:
        cluster_fn = top_cluster if args.method == "top" else adj_cluster
        results = [
            cluster_fn(data, args.k, args.seed + t) for t in range(args.trials)
        ]
    best = min(results, key=lambda r: (r.objective, r.seed))

    doc = {
        "assignments": [int(x) for x in best.assignments],
        "objective": best.objective,
        "n_iterations": best.n_iterations,
        "purity": best.purity,
        "seed": best.seed,
    }
    Path(args.output).write_text(json.dumps(doc) + "\n")
    outputs = [args.output]
    if args.trials_output:
        io.write_trials_csv(args.trials_output, results)
        outputs.append(args.trials_output)
    params = {
        "k": args.k, "trials": args.trials, "seed": args.seed,
        "method": args.method,
    }
    _manifests("cluster", t0, args.inputs, outputs, params)
    return 0


def _cmd_bench(args) -> int:
    t0 = time.perf_counter()
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = bench_distance(
        sizes, args.reps, args.seed, parallel_pairs=args.parallel_pairs
    )
    with open(args.output, "w", newline="") as fh:
        fh.write("m,n_edges,mean_s,std_s\n")
        for r in rows:
            fh.write(f"{r.n_nodes},{r.n_edges},{r.mean_s!r},{r.std_s!r}\n")
    outputs = [args.output]
    if args.plot:
        _write_bench_plot(args.plot, rows)
        outputs.append(args.plot)
    params = {"sizes": sizes, "reps": args.reps, "seed": args.seed}
    _manifests("bench", t0, [], outputs, params)
    return 0


def _write_bench_plot(path, rows) -> None:
    """Log-log runtime vs edge count as a simple SVG polyline."""
    xs = np.log10([max(r.n_edges, 1) for r in rows])
    ys = np.log10([max(r.mean_s, 1e-9) for r in rows])
    x_lo, x_hi = float(xs.min()), float(xs.max())
    y_lo, y_hi = float(ys.min()), float(ys.max())
    if x_hi <= x_lo:
        x_hi = x_lo + 1.0
    if y_hi <= y_lo:
        y_hi = y_lo + 1.0
    width, height, margin = 520, 360, 60
    span_x, span_y = width - 2 * margin, height - 2 * margin
    pts = []
    for x, y in zip(xs, ys):
        px = margin + (x - x_lo) / (x_hi - x_lo) * span_x
        py = height - margin - (y - y_lo) / (y_hi - y_lo) * span_y
        pts.append(f"{px:.2f},{py:.2f}")
    marks = "".join(
        f'<circle cx="{p.split(",")[0]}" cy="{p.split(",")[1]}" r="3" '
        f'fill="#1f77b4"/>'
        for p in pts
    )
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}" '
        f'font-family="monospace" font-size="11">'
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>'
        f'<rect x="{margin}" y="{margin}" width="{span_x}" height="{span_y}" '
        f'fill="none" stroke="#444444"/>'
        f'<polyline points="{" ".join(pts)}" fill="none" stroke="#1f77b4" '
        f'stroke-width="1.5"/>{marks}'
        f'<text x="{width // 2}" y="{height - 16}" text-anchor="middle">'
        f"log10 edges</text>"
        f'<text x="16" y="{height // 2}" text-anchor="middle" '
        f'transform="rotate(-90 16 {height // 2})">log10 seconds</text>'
        f"</svg>\n"
    )
    Path(path).write_text(svg)


def _cmd_gen_modular(args) -> int:
    t0 = time.perf_counter()
    doc = json.loads(Path(args.spec).read_text())
    try:
        spec = ModularSpec(
            n_nodes=doc["n_nodes"],
            n_modules=doc["n_modules"],
            within_low=doc["within_low"],
            within_high=doc["within_high"],
            between_low=doc["between_low"],
            between_high=doc["between_high"],
            noise_swap_prob=doc["noise_swap_prob"],
            seed=doc["seed"],
        )
    except KeyError as exc:
        raise ValueError(f"{args.spec}: missing field {exc}") from None
    graph = gen_modular(spec)
    weights = np.zeros((spec.n_nodes, spec.n_nodes))
    weights[graph.edges_u, graph.edges_v] = graph.weights
    weights = weights + weights.T
    from .connectome import Connectome

    io.write_connectome(args.output, Connectome(weights))
    _manifests("gen-modular", t0, [args.spec], [args.output], doc)
    return 0


def _cmd_plot(args) -> int:
    t0 = time.perf_counter()
    items = [io.read_persistence(p) for p in args.pers]
    _check_aligned(items)
    svg = render_persistence_svg(items, band=args.band)
    Path(args.output).write_text(svg)
    _manifests("plot", t0, args.pers, [args.output], {"band": args.band})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topofc",
        description="Functional-connectome topology: persistence summaries, "
        "exact Wasserstein statistics, and clustering.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help="task-level parallelism (env TOPOFC_THREADS); results are "
        "identical for any value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("connectome", help="activation matrix -> connectome")
    p.add_argument("--input", required=True, help="activations .csv or .bin")
    p.add_argument("--output", required=True, help="connectome .bin or .json")
    p.set_defaults(fn=_cmd_connectome)

    p = sub.add_parser("persistence", help="connectome -> persistence summary")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="persistence .json or .bin")
    p.set_defaults(fn=_cmd_persistence)

    p = sub.add_parser("distance", help="Wasserstein distances between two summaries")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--p", type=_parse_p, default=2.0, help="order >= 1, or inf")
    p.add_argument("--output", help="optional JSON report")
    p.set_defaults(fn=_cmd_distance)

    p = sub.add_parser("barycenter", help="mean persistence summary")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(fn=_cmd_barycenter)

    p = sub.add_parser("variance", help="dispersion around the barycenter")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--output")
    p.set_defaults(fn=_cmd_variance)

    p = sub.add_parser("cluster", help="centroid clustering with purity")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=("top", "adj"), default="top")
    p.add_argument("--labels", help="CSV with one label per input")
    p.add_argument("--output", required=True, help="best-trial result JSON")
    p.add_argument("--trials-output", help="per-trial CSV")
    p.set_defaults(fn=_cmd_cluster)

    p = sub.add_parser("bench", help="runtime vs graph size")
    p.add_argument("--sizes", required=True, help="comma-separated node counts")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True, help="CSV of timings")
    p.add_argument("--plot", help="optional log-log SVG")
    p.add_argument("--parallel-pairs", action="store_true")
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("gen-modular", help="synthetic modular graph")
    p.add_argument("--spec", required=True, help="ModularSpec JSON")
    p.add_argument("--output", required=True, help="graph as .bin or .json matrix")
    p.set_defaults(fn=_cmd_gen_modular)

    p = sub.add_parser("plot", help="SVG step curves of summaries")
    p.add_argument("--pers", nargs="+", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--band", action="store_true",
                   help="shade barycenter +/- one standard deviation")
    p.set_defaults(fn=_cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"topofc {args.command}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (OSError, io.FormatError, json.JSONDecodeError) as exc:
        print(f"topofc {args.command}: {exc}", file=sys.stderr)
        return DATA_ERROR
    except Exception as exc:  # pragma: no cover - defensive
        print(f"topofc {args.command}: internal error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
