"""Topological analysis of neural-network functional connectomes.

Pipeline: activation matrices -> absolute-Pearson connectomes ->
maximum-spanning-tree persistence summaries -> exact Wasserstein
distances/statistics -> centroid-based clustering.
"""

__version__ = "0.1.0"

from .cluster import (
    ClusterResult,
    LabeledDataset,
    TrialsSummary,
    adj_cluster,
    purity,
    run_trials,
    top_cluster,
)
from .connectome import ActivationMatrix, Connectome, build_connectome, pearson
from .graphgen import BenchRow, ModularSpec, bench_distance, gen_modular
from .homology import (
    GraphPersistence,
    WeightedGraph,
    betti_curves,
    graph_persistence,
)
from .wasserstein import (
    PersistenceBarycenter,
    PersistenceVariance,
    barycenter,
    combined_sq_distance,
    grad_sq_w2_births,
    pairwise_combined_sq,
    variance,
    wasserstein_births,
    wasserstein_deaths,
)

__all__ = [
    "ActivationMatrix",
    "BenchRow",
    "ClusterResult",
    "Connectome",
    "GraphPersistence",
    "LabeledDataset",
    "ModularSpec",
    "PersistenceBarycenter",
    "PersistenceVariance",
    "TrialsSummary",
    "WeightedGraph",
    "adj_cluster",
    "barycenter",
    "bench_distance",
    "betti_curves",
    "build_connectome",
    "combined_sq_distance",
    "gen_modular",
    "grad_sq_w2_births",
    "graph_persistence",
    "pairwise_combined_sq",
    "pearson",
    "purity",
    "run_trials",
    "top_cluster",
    "variance",
    "wasserstein_births",
    "wasserstein_deaths",
]
