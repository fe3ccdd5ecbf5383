"""Persistence summary of a weighted graph over its threshold filtration.

Sweeping a threshold upward and keeping edges strictly above it produces a
nested family of binary graphs. Component merges happen exactly at the
weights of a maximum spanning tree, and independent cycles disappear exactly
at the weights of the remaining edges, so the whole filtration is summarized
by two sorted multisets computed in O(E log E): the birth set (MST weights)
and the death set (non-MST weights).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected weighted graph with edges stored as parallel arrays.

    Edge arrays must satisfy 0 <= u < v < n_nodes with no duplicate pairs;
    weights are finite and nonnegative.
    """

    n_nodes: int
    edges_u: np.ndarray
    edges_v: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if self.n_nodes < 1:
            raise ValueError("graph needs at least one node")
        u = np.asarray(self.edges_u, dtype=np.int64)
        v = np.asarray(self.edges_v, dtype=np.int64)
        w = np.asarray(self.weights, dtype=np.float64)
        if not (u.ndim == v.ndim == w.ndim == 1 and u.size == v.size == w.size):
            raise ValueError("edge arrays must be 1-D and equal length")
        if u.size:
            if u.min() < 0 or v.max() >= self.n_nodes:
                raise ValueError("edge endpoints out of range")
            if np.any(u >= v):
                raise ValueError("edges must satisfy u < v (no self-loops)")
            codes = u * self.n_nodes + v
            if np.unique(codes).size != codes.size:
                raise ValueError("duplicate edges")
        if not np.isfinite(w).all() or (w.size and w.min() < 0.0):
            raise ValueError("weights must be finite and >= 0")
        object.__setattr__(self, "edges_u", u)
        object.__setattr__(self, "edges_v", v)
        object.__setattr__(self, "weights", w)

    @property
    def n_edges(self) -> int:
        return self.weights.size

    @classmethod
    def from_edge_list(cls, n_nodes: int, edges) -> "WeightedGraph":
        """Build from an iterable of (u, v, weight) triples."""
        triples = [(int(u), int(v), float(w)) for u, v, w in edges]
        u = np.asarray([t[0] for t in triples], dtype=np.int64)
        v = np.asarray([t[1] for t in triples], dtype=np.int64)
        w = np.asarray([t[2] for t in triples], dtype=np.float64)
        return cls(n_nodes, u, v, w)

    @classmethod
    def from_dense(cls, weights: np.ndarray) -> "WeightedGraph":
        """Complete graph from a symmetric weight matrix (zero-weight edges kept)."""
        w = np.asarray(weights, dtype=np.float64)
        m = w.shape[0]
        u, v = np.triu_indices(m, 1)
        return cls(m, u.astype(np.int64), v.astype(np.int64), w[u, v])


@dataclass(frozen=True)
class GraphPersistence:
    """Sorted birth and death values of a connected weighted graph.

    births has length n_nodes - 1 and deaths length E - (n_nodes - 1); their
    multiset union is exactly the edge-weight multiset of the source graph.
    """

    n_nodes: int
    births: np.ndarray
    deaths: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.births, dtype=np.float64)
        d = np.asarray(self.deaths, dtype=np.float64)
        if self.n_nodes < 2:
            raise ValueError("persistence requires at least 2 nodes")
        if b.size != self.n_nodes - 1:
            raise ValueError(
                f"expected {self.n_nodes - 1} births, got {b.size}"
            )
        if b.size > 1 and np.any(np.diff(b) < 0):
            raise ValueError("births must be ascending")
        if d.size > 1 and np.any(np.diff(d) < 0):
            raise ValueError("deaths must be ascending")
        object.__setattr__(self, "births", b)
        object.__setattr__(self, "deaths", d)


def graph_persistence(g: WeightedGraph) -> GraphPersistence:
    """Split edge weights into births (maximum-spanning-tree edges) and deaths.

    Kruskal on descending-sorted edges with union-find (path compression and
    union by rank). Ties break by (weight desc, u asc, v asc) so the chosen
    tree is deterministic; the returned multisets are tie-independent. Once
    the tree is complete every remaining edge is a death, so the scan stops
    early and the sort dominates the cost.

    Raises ValueError for graphs with fewer than 2 nodes or disconnected
    graphs (detected when the tree cannot reach n_nodes - 1 edges).
    """
    m = g.n_nodes
    if m < 2:
        raise ValueError("graph persistence needs at least 2 nodes")
    n_edges = g.n_edges

    # primary key: weight descending; ties by u then v ascending. The
    # single-key stable sort already realizes that order when weights are
    # tie-free, so the 3-key lexsort only runs when ties exist.
    neg = -g.weights
    order = np.argsort(neg, kind="stable")
    w_desc = g.weights[order]
    if n_edges > 1 and np.any(w_desc[1:] == w_desc[:-1]):
        order = np.lexsort((g.edges_v, g.edges_u, neg))
        w_desc = g.weights[order]

    parent = list(range(m))
    rank = [0] * m
    in_tree = np.zeros(n_edges, dtype=bool)
    remaining = m - 1
    scanned = 0
    chunk = 1 << 16
    # endpoints are gathered and converted to Python ints chunk by chunk:
    # the scan usually stops long before the end, leaving the suffix untouched
    while remaining > 0 and scanned < n_edges:
        hi = min(scanned + chunk, n_edges)
        idx = order[scanned:hi]
        cu = g.edges_u[idx].tolist()
        cv = g.edges_v[idx].tolist()
        for j in range(hi - scanned):
            a = cu[j]
            root_a = a
            while parent[root_a] != root_a:
                root_a = parent[root_a]
            while parent[a] != root_a:
                parent[a], a = root_a, parent[a]
            b = cv[j]
            root_b = b
            while parent[root_b] != root_b:
                root_b = parent[root_b]
            while parent[b] != root_b:
                parent[b], b = root_b, parent[b]
            if root_a != root_b:
                if rank[root_a] < rank[root_b]:
                    root_a, root_b = root_b, root_a
                parent[root_b] = root_a
                if rank[root_a] == rank[root_b]:
                    rank[root_a] += 1
                in_tree[scanned + j] = True
                remaining -= 1
                if remaining == 0:
                    scanned += j + 1
                    break
        else:
            scanned = hi

    if remaining > 0:
        raise ValueError(
            f"graph is disconnected: spanning tree found only "
            f"{m - 1 - remaining} of {m - 1} edges"
        )

    prefix = in_tree[:scanned]
    births = w_desc[:scanned][prefix][::-1].copy()
    # non-tree prefix edges and the untouched suffix are both descending
    deaths = np.concatenate([w_desc[:scanned][~prefix], w_desc[scanned:]])[::-1].copy()
    return GraphPersistence(m, births, deaths)


def betti_curves(g: WeightedGraph, thresholds) -> tuple[np.ndarray, np.ndarray]:
    """Component and cycle counts of the thresholded graph at each value.

    An edge survives threshold eps iff its weight is strictly greater than
    eps, so beta0(eps) = 1 + #{births <= eps} and
    beta1(eps) = #{deaths > eps}.
    """
    eps = np.asarray(thresholds, dtype=np.float64)
    if eps.ndim != 1:
        raise ValueError("thresholds must be a 1-D sequence")
    if eps.size > 1 and np.any(np.diff(eps) < 0):
        raise ValueError("thresholds must be ascending")
    pers = graph_persistence(g)
    beta0 = 1 + np.searchsorted(pers.births, eps, side="right")
    beta1 = pers.deaths.size - np.searchsorted(pers.deaths, eps, side="right")
    return beta0.astype(np.int64), beta1.astype(np.int64)
