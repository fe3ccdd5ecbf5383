import numpy as np
import pytest

from topofc import (
    GraphPersistence,
    WeightedGraph,
    betti_curves,
    graph_persistence,
)
from oracles import betti_oracle, mst_weight_oracle
from util import random_connected_graph


def triangle():
    return WeightedGraph.from_edge_list(
        3, [(0, 1, 0.9), (0, 2, 0.5), (1, 2, 0.7)]
    )


class TestGraphPersistence:
    def test_triangle_hand_case(self):
        pers = graph_persistence(triangle())
        assert pers.births.tolist() == [0.7, 0.9]
        assert pers.deaths.tolist() == [0.5]
        # cross-check against exhaustive spanning-tree search
        assert mst_weight_oracle(triangle()) == [0.7, 0.9]

    def test_tree_has_no_deaths(self):
        g = WeightedGraph.from_edge_list(
            4, [(0, 1, 0.3), (1, 2, 0.8), (2, 3, 0.1)]
        )
        pers = graph_persistence(g)
        assert pers.deaths.size == 0
        assert pers.births.tolist() == [0.1, 0.3, 0.8]

    def test_equal_weight_complete_graph(self):
        w = np.full((5, 5), 0.5)
        np.fill_diagonal(w, 0.0)
        pers = graph_persistence(WeightedGraph.from_dense(w))
        assert pers.births.tolist() == [0.5] * 4
        assert pers.deaths.tolist() == [0.5] * 6

    def test_cardinality_identity_on_complete_graphs(self):
        rng = np.random.default_rng(23)
        for m in (3, 4, 7, 12, 25):
            w = rng.uniform(size=(m, m))
            w = np.triu(w, 1)
            pers = graph_persistence(WeightedGraph.from_dense(w + w.T))
            assert pers.births.size == m - 1
            assert pers.deaths.size == 1 + m * (m - 3) // 2

    def test_partition_of_edge_weights(self):
        rng = np.random.default_rng(29)
        for _ in range(30):
            g = random_connected_graph(rng)
            pers = graph_persistence(g)
            combined = np.sort(np.concatenate([pers.births, pers.deaths]))
            assert np.array_equal(combined, np.sort(g.weights))

    def test_matches_spanning_tree_enumeration(self):
        rng = np.random.default_rng(31)
        for _ in range(60):
            g = random_connected_graph(rng)
            pers = graph_persistence(g)
            assert pers.births.tolist() == mst_weight_oracle(g)

    def test_tie_robust_under_edge_reordering(self):
        rng = np.random.default_rng(37)
        for _ in range(20):
            g = random_connected_graph(rng, tie_values=True)
            pers = graph_persistence(g)
            order = rng.permutation(g.n_edges)
            shuffled = WeightedGraph(
                g.n_nodes,
                g.edges_u[order],
                g.edges_v[order],
                g.weights[order],
            )
            again = graph_persistence(shuffled)
            assert pers.births.tolist() == again.births.tolist()
            assert pers.deaths.tolist() == again.deaths.tolist()

    def test_node_relabeling_invariance(self):
        rng = np.random.default_rng(41)
        for _ in range(20):
            g = random_connected_graph(rng)
            pers = graph_persistence(g)
            perm = rng.permutation(g.n_nodes)
            u2 = perm[g.edges_u]
            v2 = perm[g.edges_v]
            lo = np.minimum(u2, v2)
            hi = np.maximum(u2, v2)
            relabeled = WeightedGraph(g.n_nodes, lo, hi, g.weights)
            again = graph_persistence(relabeled)
            assert pers.births.tolist() == again.births.tolist()
            assert pers.deaths.tolist() == again.deaths.tolist()

    def test_disconnected_graph_rejected(self):
        g = WeightedGraph.from_edge_list(4, [(0, 1, 0.5), (2, 3, 0.6)])
        with pytest.raises(ValueError, match="disconnected"):
            graph_persistence(g)

    def test_single_node_rejected(self):
        g = WeightedGraph.from_edge_list(1, [])
        with pytest.raises(ValueError):
            graph_persistence(g)


class TestBettiCurves:
    def test_triangle_at_hand_thresholds(self):
        beta0, beta1 = betti_curves(triangle(), [0.6])
        assert beta0.tolist() == [1]
        assert beta1.tolist() == [0]
        assert betti_oracle(triangle(), 0.6) == (1, 0)

    def test_extreme_thresholds(self):
        rng = np.random.default_rng(43)
        for _ in range(10):
            g = random_connected_graph(rng)
            below = g.weights.min() - 0.1
            above = g.weights.max() + 0.1
            beta0, beta1 = betti_curves(g, [below, above])
            assert beta0[0] == 1
            assert beta1[0] == g.n_edges - g.n_nodes + 1
            assert beta0[1] == g.n_nodes
            assert beta1[1] == 0

    def test_matches_union_find_oracle_everywhere(self):
        rng = np.random.default_rng(47)
        delta = 1e-9
        for _ in range(40):
            g = random_connected_graph(rng)
            probes = []
            for w in np.unique(g.weights):
                probes.extend([w - delta, w, w + delta])
            probes = sorted(probes)
            beta0, beta1 = betti_curves(g, probes)
            for eps, b0, b1 in zip(probes, beta0, beta1):
                assert (b0, b1) == betti_oracle(g, eps)

    def test_monotone_in_threshold(self):
        rng = np.random.default_rng(53)
        for _ in range(20):
            g = random_connected_graph(rng)
            probes = np.linspace(-0.1, 1.1, 40)
            beta0, beta1 = betti_curves(g, probes)
            assert np.all(np.diff(beta0) >= 0)
            assert np.all(np.diff(beta1) <= 0)

    def test_unsorted_thresholds_rejected(self):
        with pytest.raises(ValueError):
            betti_curves(triangle(), [0.5, 0.1])


class TestTypes:
    def test_graph_validation(self):
        with pytest.raises(ValueError):
            WeightedGraph.from_edge_list(3, [(1, 0, 0.5)])  # u >= v
        with pytest.raises(ValueError):
            WeightedGraph.from_edge_list(3, [(0, 3, 0.5)])  # out of range
        with pytest.raises(ValueError):
            WeightedGraph.from_edge_list(3, [(0, 1, 0.5), (0, 1, 0.7)])
        with pytest.raises(ValueError):
            WeightedGraph.from_edge_list(3, [(0, 1, -0.5)])

    def test_persistence_validation(self):
        with pytest.raises(ValueError):
            GraphPersistence(3, np.array([0.9, 0.7]), np.array([0.5]))
        with pytest.raises(ValueError):
            GraphPersistence(3, np.array([0.7]), np.array([0.5]))
