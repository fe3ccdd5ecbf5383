"""Centroid-based clustering of persistence summaries and connectomes.

The topological method runs Lloyd's algorithm under the combined squared
2-Wasserstein distance, with the closed-form barycenter as the centroid
update. Because the metric is the squared Euclidean distance between
concatenated sorted vectors, the iteration is exact k-means in that
coordinate system. The baseline clusters connectomes on the vectorized
strict lower triangle of the weight matrix. Purity scores cluster/label
alignment.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .connectome import Connectome
from .homology import GraphPersistence
from .rng import Xoshiro256StarStar
from .wasserstein import PersistenceBarycenter, _check_aligned

MAX_ITERATIONS = 300
CONVERGENCE_TOL = 1e-12


@dataclass(frozen=True)
class LabeledDataset:
    """Persistence summaries (or connectomes) with optional class labels."""

    items: list
    labels: Optional[list] = None

    def __post_init__(self):
        if not self.items:
            raise ValueError("dataset is empty")
        if self.labels is not None and len(self.labels) != len(self.items):
            raise ValueError(
                f"{len(self.labels)} labels for {len(self.items)} items"
            )

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class ClusterResult:
    assignments: np.ndarray
    centroids: list
    objective: float
    n_iterations: int
    seed: int
    purity: Optional[float] = None

    def __post_init__(self):
        a = np.asarray(self.assignments, dtype=np.int64)
        k = len(self.centroids)
        if a.size and (a.min() < 0 or a.max() >= k):
            raise ValueError("cluster index out of range")
        object.__setattr__(self, "assignments", a)


def _pairwise_sq(features: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """Exact squared Euclidean distances, chunked to bound peak memory."""
    n, dim = features.shape
    k = centers.shape[0]
    out = np.empty((n, k), dtype=np.float64)
    chunk = max(1, (4 << 20) // max(1, k * dim))
    for s in range(0, n, chunk):
        diff = features[s : s + chunk, None, :] - centers[None, :, :]
        out[s : s + chunk] = np.einsum("nkd,nkd->nk", diff, diff)
    return out


def _kmeanspp_init(
    features: np.ndarray, k: int, rng: Xoshiro256StarStar
) -> np.ndarray:
    """Distance-weighted probabilistic seeding over the items themselves."""
    n = features.shape[0]
    chosen = [rng.below(n)]
    d2 = np.sum((features - features[chosen[0]]) ** 2, axis=1)
    for _ in range(1, k):
        idx = rng.choice_weighted(d2)
        chosen.append(idx)
        d2 = np.minimum(d2, np.sum((features - features[idx]) ** 2, axis=1))
    return features[chosen].copy()


def _repair_empty(
    assign: np.ndarray, d2: np.ndarray, k: int
) -> np.ndarray:
    """Give each empty cluster the point farthest from its current centroid.

    Only points whose cluster keeps at least one other member are eligible,
    so the repair never empties another cluster.
    """
    n = assign.shape[0]
    current = d2[np.arange(n), assign]
    for c in range(k):
        if np.any(assign == c):
            continue
        counts = np.bincount(assign, minlength=k)
        eligible = counts[assign] > 1
        scores = np.where(eligible, current, -1.0)
        far = int(np.argmax(scores))
        assign[far] = c
        current[far] = 0.0
    return assign


def _lloyd(
    features: np.ndarray,
    k: int,
    rng: Xoshiro256StarStar,
    max_iterations: int = MAX_ITERATIONS,
    tol: float = CONVERGENCE_TOL,
):
    """Lloyd iterations; returns (assignments, centers, objective, n_iter, history)."""
    n = features.shape[0]
    centers = _kmeanspp_init(features, k, rng)
    prev_assign = None
    prev_obj = np.inf
    objective = np.inf
    history = []
    n_iter = 0
    assign = np.zeros(n, dtype=np.int64)
    for _ in range(max_iterations):
        n_iter += 1
        d2 = _pairwise_sq(features, centers)
        assign = np.argmin(d2, axis=1)  # equidistant ties: lowest index
        assign = _repair_empty(assign, d2, k)
        if prev_assign is not None and np.array_equal(assign, prev_assign):
            objective = prev_obj
            break
        for c in range(k):
            centers[c] = features[assign == c].mean(axis=0)
        resid = features - centers[assign]
        objective = float(np.einsum("nd,nd->", resid, resid))
        history.append(objective)
        if prev_obj - objective < tol:
            break
        prev_assign = assign.copy()
        prev_obj = objective
    return assign, centers, float(objective), n_iter, history


def _persistence_features(items: Sequence[GraphPersistence]) -> np.ndarray:
    return np.stack(
        [np.concatenate([it.births, it.deaths]) for it in items]
    )


def _adjacency_features(items: Sequence[Connectome]) -> np.ndarray:
    m = items[0].n_neurons
    for it in items:
        if it.n_neurons != m:
            raise ValueError(
                f"connectome size mismatch: {m} vs {it.n_neurons}"
            )
    rows, cols = np.tril_indices(m, -1)
    return np.stack([it.weights[rows, cols] for it in items])


def _validate_k(k: int, n: int) -> None:
    if k < 1:
        raise ValueError("k must be positive")
    if k > n:
        raise ValueError(f"k={k} exceeds dataset size {n}")


def top_cluster(
    data: LabeledDataset,
    k: int,
    seed: int,
    max_iterations: int = MAX_ITERATIONS,
) -> ClusterResult:
    """Lloyd clustering under the combined squared 2-Wasserstein distance.

    Centroids are persistence barycenters. Initialization is k-means++-style
    seeding driven by a seeded generator, so a given seed always produces
    the same result.
    """
    items = data.items
    for it in items:
        if not isinstance(it, GraphPersistence):
            raise ValueError("top_cluster expects GraphPersistence items")
    _check_aligned(items)
    _validate_k(k, len(items))
    features = _persistence_features(items)
    rng = Xoshiro256StarStar(seed)
    assign, centers, objective, n_iter, _ = _lloyd(
        features, k, rng, max_iterations
    )
    nb = items[0].births.size
    counts = np.bincount(assign, minlength=k)
    centroids = [
        PersistenceBarycenter(
            items[0].n_nodes, c[:nb], c[nb:], int(counts[i])
        )
        for i, c in enumerate(centers)
    ]
    score = purity(assign, data.labels) if data.labels is not None else None
    return ClusterResult(assign, centroids, objective, n_iter, seed, score)


def adj_cluster(
    data: LabeledDataset,
    k: int,
    seed: int,
    max_iterations: int = MAX_ITERATIONS,
) -> ClusterResult:
    """Euclidean k-means on the strict lower triangle of connectome weights."""
    items = data.items
    for it in items:
        if not isinstance(it, Connectome):
            raise ValueError("adj_cluster expects Connectome items")
    _validate_k(k, len(items))
    features = _adjacency_features(items)
    rng = Xoshiro256StarStar(seed)
    assign, centers, objective, n_iter, _ = _lloyd(
        features, k, rng, max_iterations
    )
    centroids = [centers[i].copy() for i in range(k)]
    score = purity(assign, data.labels) if data.labels is not None else None
    return ClusterResult(assign, centroids, objective, n_iter, seed, score)


def purity(assignments, labels) -> float:
    """Fraction of items sitting in a cluster dominated by their own class."""
    assignments = np.asarray(assignments)
    if len(labels) != assignments.size:
        raise ValueError(
            f"{len(labels)} labels for {assignments.size} assignments"
        )
    labels = np.asarray(labels)
    total = 0
    for c in np.unique(assignments):
        members = labels[assignments == c]
        _, counts = np.unique(members, return_counts=True)
        total += int(counts.max())
    return total / assignments.size


@dataclass(frozen=True)
class TrialsSummary:
    mean_purity: float
    std_purity: float
    results: list


def run_trials(
    data: LabeledDataset,
    k: int,
    n_trials: int,
    base_seed: int,
    method: str = "top",
    n_threads: int = 1,
) -> TrialsSummary:
    """Independent clusterings with seeds base_seed .. base_seed+n_trials-1.

    Labels are required; reports the mean and population standard deviation
    of the per-trial purity. Trials are independent, so they may run on a
    thread pool; results are ordered by trial index and identical for any
    thread count.
    """
    if data.labels is None:
        raise ValueError("run_trials requires labels")
    if n_trials < 1:
        raise ValueError("need at least one trial")
    cluster_fn = {"top": top_cluster, "adj": adj_cluster}.get(method)
    if cluster_fn is None:
        raise ValueError(f"unknown method {method!r}")
    seeds = [base_seed + t for t in range(n_trials)]
    if n_threads > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            results = list(pool.map(lambda s: cluster_fn(data, k, s), seeds))
    else:
        results = [cluster_fn(data, k, s) for s in seeds]
    purities = np.asarray([r.purity for r in results], dtype=np.float64)
    return TrialsSummary(
        float(purities.mean()), float(purities.std()), results
    )
