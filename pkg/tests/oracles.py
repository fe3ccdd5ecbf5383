"""Brute-force reference implementations, used only by the test suite.

Every routine here recomputes a quantity by exhaustive search or direct
counting, independent of the library's algorithms. Hard size caps guard
against accidental exponential blow-ups.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from topofc.homology import WeightedGraph


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def betti_oracle(g: WeightedGraph, eps: float) -> tuple[int, int]:
    """Component count and cycle rank of the graph thresholded at eps.

    Builds the binary graph keeping edges with weight strictly above eps,
    counts components by union-find, and uses cycle rank
    beta1 = E - M + beta0. Disconnected results are fine here.
    """
    m = g.n_nodes
    dsu = _DSU(m)
    kept = 0
    for u, v, w in zip(g.edges_u, g.edges_v, g.weights):
        if w > eps:
            kept += 1
            dsu.union(int(u), int(v))
    beta0 = len({dsu.find(x) for x in range(m)})
    beta1 = kept - m + beta0
    return beta0, beta1


def transport_oracle(x, y, p) -> float:
    """Minimum of the L^p matching cost over all bijections (length <= 8)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    assert x.size == y.size <= 8, "oracle capped at length 8"
    if x.size == 0:
        return 0.0
    best = np.inf
    for perm in permutations(range(x.size)):
        diff = np.abs(x - y[list(perm)])
        if np.isinf(p):
            cost = float(diff.max())
        else:
            cost = float(np.sum(diff**p) ** (1.0 / p))
        best = min(best, cost)
    return best


def mst_weight_oracle(g: WeightedGraph) -> list[float]:
    """Weight multiset of a maximum-total-weight spanning tree (M <= 8).

    Exhaustive include/exclude search over edges in descending weight
    order; the sum-of-top-remaining bound only prunes branches that cannot
    beat the incumbent, so the search stays exact. All maximum spanning
    trees share one weight multiset, which is what callers compare.
    """
    m = g.n_nodes
    assert m <= 8, "oracle capped at 8 nodes"
    edges = sorted(
        zip(g.edges_u.tolist(), g.edges_v.tolist(), g.weights.tolist()),
        key=lambda e: -e[2],
    )
    weights_desc = [w for _, _, w in edges]
    suffix_best: list[list[float]] = [
        sorted(weights_desc[i:], reverse=True) for i in range(len(edges) + 1)
    ]
    best = {"total": -np.inf, "multiset": None}

    def recurse(i, parent, count, total, chosen):
        if count == m - 1:
            if total > best["total"]:
                best["total"] = total
                best["multiset"] = sorted(chosen)
            return
        need = m - 1 - count
        rest = suffix_best[i]
        if len(rest) < need:
            return
        if total + sum(rest[:need]) < best["total"]:
            return
        u, v, w = edges[i]
        root_u, root_v = parent[u], parent[v]
        while parent[root_u] != root_u:
            root_u = parent[root_u]
        while parent[root_v] != root_v:
            root_v = parent[root_v]
        if root_u != root_v:
            child = parent.copy()
            child[root_v] = root_u
            recurse(i + 1, child, count + 1, total + w, chosen + [w])
        recurse(i + 1, parent, count, total, chosen)

    recurse(0, list(range(m)), 0, 0.0, [])
    assert best["multiset"] is not None, "graph is disconnected"
    return best["multiset"]


def best_two_partition(features: np.ndarray) -> tuple[float, np.ndarray]:
    """Globally optimal 2-cluster objective by exhausting bipartitions.

    Objective: sum of squared Euclidean distances to the cluster means.
    Capped at 12 items (2^11 candidate splits).
    """
    n = features.shape[0]
    assert 2 <= n <= 12, "oracle capped at 12 items"
    best_obj = np.inf
    best_assign = None
    # item 0 fixed in cluster 0 kills the label symmetry
    for mask in range(1, 1 << (n - 1)):
        assign = np.zeros(n, dtype=np.int64)
        for i in range(1, n):
            assign[i] = (mask >> (i - 1)) & 1
        if not np.any(assign == 1):
            continue
        obj = 0.0
        for c in (0, 1):
            members = features[assign == c]
            centroid = members.mean(axis=0)
            obj += float(np.sum((members - centroid) ** 2))
        if obj < best_obj:
            best_obj = obj
            best_assign = assign
    return best_obj, best_assign
