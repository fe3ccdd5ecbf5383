"""Shared helpers for building randomized test inputs."""

from __future__ import annotations

import numpy as np

from topofc.homology import WeightedGraph, GraphPersistence, graph_persistence


def random_connected_graph(
    rng: np.random.Generator,
    max_nodes: int = 8,
    extra_edge_prob: float | None = None,
    tie_values: bool = False,
) -> WeightedGraph:
    """Random connected graph: a random spanning tree plus extra edges.

    With tie_values=True weights are snapped to a coarse grid so duplicate
    weights are common.
    """
    m = int(rng.integers(2, max_nodes + 1))
    if extra_edge_prob is None:
        extra_edge_prob = float(rng.choice([0.2, 0.5, 1.0]))
    pairs = set()
    nodes = rng.permutation(m)
    for i in range(1, m):
        a = int(nodes[i])
        b = int(nodes[rng.integers(0, i)])
        pairs.add((min(a, b), max(a, b)))
    for u in range(m):
        for v in range(u + 1, m):
            if (u, v) not in pairs and rng.random() < extra_edge_prob:
                pairs.add((u, v))
    edges = sorted(pairs)
    w = rng.uniform(0.0, 1.0, size=len(edges))
    if tie_values:
        w = np.round(w, 1)
    return WeightedGraph.from_edge_list(m, [(u, v, x) for (u, v), x in zip(edges, w)])


def random_complete_graph(rng: np.random.Generator, m: int) -> WeightedGraph:
    w = rng.uniform(0.0, 1.0, size=(m, m))
    w = np.triu(w, 1)
    return WeightedGraph.from_dense(w + w.T)


def random_persistence(
    rng: np.random.Generator, n_nodes: int, n_deaths: int
) -> GraphPersistence:
    births = np.sort(rng.uniform(0.0, 1.0, size=n_nodes - 1))
    deaths = np.sort(rng.uniform(0.0, 1.0, size=n_deaths))
    return GraphPersistence(n_nodes, births, deaths)


def persistence_of(graph: WeightedGraph) -> GraphPersistence:
    return graph_persistence(graph)
