"""Synthetic modular graphs and the runtime benchmark.

A modular graph is a complete weighted graph whose nodes are split into
near-equal modules; within-module edges draw weights from a higher range
than between-module edges, with an optional per-edge probability of
swapping the two roles. Generation is counter-based and fully determined
by the seed. The benchmark times persistence extraction plus the combined
distance on pairs of such graphs across sizes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .homology import WeightedGraph, graph_persistence
from .rng import derive_key, stream_uniform
from .wasserstein import combined_sq_distance

_WEIGHT_STREAM = 0x57454947
_SWAP_STREAM = 0x53574150


@dataclass(frozen=True)
class ModularSpec:
    """Parameters of one modular graph.

    Within/between weight ranges must satisfy 0 <= low <= high <= 1. Nodes
    are partitioned into n_modules contiguous blocks whose sizes differ by
    at most one.
    """

    n_nodes: int
    n_modules: int
    within_low: float
    within_high: float
    between_low: float
    between_high: float
    noise_swap_prob: float
    seed: int

    def __post_init__(self):
        if self.n_nodes < 2:
            raise ValueError("need at least 2 nodes")
        if not 1 <= self.n_modules <= self.n_nodes:
            raise ValueError(
                f"n_modules must be in [1, {self.n_nodes}], got {self.n_modules}"
            )
        for lo, hi, name in (
            (self.within_low, self.within_high, "within"),
            (self.between_low, self.between_high, "between"),
        ):
            if not 0.0 <= lo <= hi <= 1.0:
                raise ValueError(
                    f"{name} range must satisfy 0 <= low <= high <= 1, "
                    f"got [{lo}, {hi}]"
                )
        if not 0.0 <= self.noise_swap_prob <= 1.0:
            raise ValueError("noise_swap_prob must be in [0, 1]")

    def module_of(self) -> np.ndarray:
        """Module index per node; block sizes differ by at most one."""
        base, rem = divmod(self.n_nodes, self.n_modules)
        sizes = [base + 1 if i < rem else base for i in range(self.n_modules)]
        return np.repeat(np.arange(self.n_modules), sizes)


def gen_modular(spec: ModularSpec) -> WeightedGraph:
    """Complete modular graph with weights determined by spec.seed."""
    m = spec.n_nodes
    u, v = np.triu_indices(m, 1)
    module = spec.module_of()
    within = module[u] == module[v]

    n_edges = u.size
    draws = stream_uniform(derive_key(spec.seed, _WEIGHT_STREAM), n_edges)
    swaps = stream_uniform(derive_key(spec.seed, _SWAP_STREAM), n_edges)
    use_within = within ^ (swaps < spec.noise_swap_prob)

    w = np.where(
        use_within,
        spec.within_low + draws * (spec.within_high - spec.within_low),
        spec.between_low + draws * (spec.between_high - spec.between_low),
    )
    return WeightedGraph(m, u.astype(np.int64), v.astype(np.int64), w)


@dataclass(frozen=True)
class BenchRow:
    n_nodes: int
    n_edges: int
    mean_s: float
    std_s: float


def _bench_spec(m: int, seed: int, which: int) -> ModularSpec:
    return ModularSpec(
        n_nodes=m,
        n_modules=min(10, m),
        within_low=0.6,
        within_high=1.0,
        between_low=0.0,
        between_high=0.4,
        noise_swap_prob=0.05,
        seed=derive_key(seed, m * 2 + which),
    )


def bench_distance(
    sizes: list[int], reps: int, seed: int, parallel_pairs: bool = False
) -> list[BenchRow]:
    """Wall-clock statistics for persistence + combined distance per size.

    For each node count, generates two modular graphs, runs one discarded
    warm-up, then times `reps` runs of persistence extraction on both
    graphs followed by the combined squared distance.
    """
    if not sizes:
        raise ValueError("sizes is empty")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be ascending")
    if reps < 1:
        raise ValueError("reps must be positive")

    rows = []
    for m in sizes:
        g1 = gen_modular(_bench_spec(m, seed, 0))
        g2 = gen_modular(_bench_spec(m, seed, 1))
        times = []
        for r in range(reps + 1):
            t0 = time.perf_counter()
            if parallel_pairs:
                from concurrent.futures import ThreadPoolExecutor

                with ThreadPoolExecutor(max_workers=2) as pool:
                    f1 = pool.submit(graph_persistence, g1)
                    f2 = pool.submit(graph_persistence, g2)
                    p1, p2 = f1.result(), f2.result()
            else:
                p1 = graph_persistence(g1)
                p2 = graph_persistence(g2)
            combined_sq_distance(p1, p2)
            elapsed = time.perf_counter() - t0
            if r > 0:  # first pass is warm-up
                times.append(elapsed)
        arr = np.asarray(times)
        rows.append(
            BenchRow(m, g1.n_edges, float(arr.mean()), float(arr.std()))
        )
    return rows
