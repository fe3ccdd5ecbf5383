import numpy as np
import pytest

from topofc import (
    ModularSpec,
    bench_distance,
    combined_sq_distance,
    gen_modular,
    graph_persistence,
)


def spec(**overrides):
    base = dict(
        n_nodes=12,
        n_modules=3,
        within_low=0.6,
        within_high=1.0,
        between_low=0.0,
        between_high=0.4,
        noise_swap_prob=0.0,
        seed=7,
    )
    base.update(overrides)
    return ModularSpec(**base)


class TestModularSpec:
    def test_invalid_ranges_rejected(self):
        with pytest.raises(ValueError):
            spec(within_low=0.8, within_high=0.6)
        with pytest.raises(ValueError):
            spec(between_high=1.4)
        with pytest.raises(ValueError):
            spec(noise_swap_prob=1.2)
        with pytest.raises(ValueError):
            spec(n_modules=0)
        with pytest.raises(ValueError):
            spec(n_modules=13)

    def test_balanced_partition(self):
        for m, q in ((12, 3), (13, 3), (17, 5), (7, 7), (9, 1)):
            sizes = np.bincount(spec(n_nodes=m, n_modules=q).module_of())
            assert sizes.sum() == m
            assert sizes.max() - sizes.min() <= 1


class TestGenModular:
    def test_complete_graph(self):
        g = gen_modular(spec())
        assert g.n_edges == 12 * 11 // 2

    def test_single_module_draws_only_within_range(self):
        g = gen_modular(spec(n_modules=1))
        assert g.weights.min() >= 0.6
        assert g.weights.max() <= 1.0

    def test_disjoint_ranges_separate_cleanly(self):
        s = spec()
        g = gen_modular(s)
        module = s.module_of()
        within = module[g.edges_u] == module[g.edges_v]
        assert g.weights[within].min() > g.weights[~within].max()

    def test_swap_probability_flips_roles(self):
        s = spec(noise_swap_prob=1.0)
        g = gen_modular(s)
        module = s.module_of()
        within = module[g.edges_u] == module[g.edges_v]
        # with certain swapping, within-module edges use the between range
        assert g.weights[within].max() <= 0.4
        assert g.weights[~within].min() >= 0.6

    def test_same_seed_reproduces_exactly(self):
        g1 = gen_modular(spec(noise_swap_prob=0.3))
        g2 = gen_modular(spec(noise_swap_prob=0.3))
        assert np.array_equal(g1.weights, g2.weights)

    def test_different_seeds_differ(self):
        g1 = gen_modular(spec())
        g2 = gen_modular(spec(seed=8))
        assert not np.array_equal(g1.weights, g2.weights)

    def test_within_range_shift_separates_persistence(self):
        # groups drawn from different within ranges sit farther apart than
        # any within-group pair, which is what clustering tests rely on
        hi = [
            graph_persistence(gen_modular(spec(seed=s, within_low=0.75,
                                               within_high=0.95)))
            for s in range(20, 24)
        ]
        lo = [
            graph_persistence(gen_modular(spec(seed=s, within_low=0.45,
                                               within_high=0.65)))
            for s in range(30, 34)
        ]
        within = [
            combined_sq_distance(a, b)
            for group in (hi, lo)
            for i, a in enumerate(group)
            for b in group[i + 1:]
        ]
        across = [combined_sq_distance(a, b) for a in hi for b in lo]
        assert min(across) > max(within)


class TestBench:
    def test_row_shape_and_positivity(self):
        rows = bench_distance([20, 40], reps=2, seed=1)
        assert len(rows) == 2
        assert rows[0].n_nodes == 20
        assert rows[0].n_edges == 20 * 19 // 2
        assert rows[1].n_edges == 40 * 39 // 2
        for r in rows:
            assert r.mean_s > 0.0
            assert r.std_s >= 0.0

    def test_unsorted_sizes_rejected(self):
        with pytest.raises(ValueError):
            bench_distance([40, 20], reps=1, seed=0)

    def test_parallel_pairs_flag_runs(self):
        rows = bench_distance([20], reps=1, seed=2, parallel_pairs=True)
        assert len(rows) == 1
