"""Exact Wasserstein distances and statistics on persistence summaries.

Because birth and death values are plain sorted multisets of equal
cardinality, the optimal transport plan in one dimension matches the l-th
smallest value to the l-th smallest value. The p-Wasserstein distance is
therefore the L^p norm of the difference of the index-aligned sorted
vectors, the barycenter is the elementwise mean, and gradients of the
squared 2-Wasserstein distance are available in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .homology import GraphPersistence


@dataclass(frozen=True)
class PersistenceBarycenter:
    """Elementwise mean of index-aligned sorted birth and death vectors."""

    n_nodes: int
    mean_births: np.ndarray
    mean_deaths: np.ndarray
    n_inputs: int

    def __post_init__(self):
        b = np.asarray(self.mean_births, dtype=np.float64)
        d = np.asarray(self.mean_deaths, dtype=np.float64)
        if b.size > 1 and np.any(np.diff(b) < 0):
            raise ValueError("mean births must be ascending")
        if d.size > 1 and np.any(np.diff(d) < 0):
            raise ValueError("mean deaths must be ascending")
        object.__setattr__(self, "mean_births", b)
        object.__setattr__(self, "mean_deaths", d)


@dataclass(frozen=True)
class PersistenceVariance:
    """Mean squared L2 deviation from the barycenter, per component."""

    var_births: float
    var_deaths: float

    def __post_init__(self):
        if self.var_births < 0.0 or self.var_deaths < 0.0:
            raise ValueError("variance must be nonnegative")


def _check_p(p) -> float:
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise ValueError(f"p must be >= 1 or inf, got {p}")
    return p


def _lp_distance(x: np.ndarray, y: np.ndarray, p: float, what: str) -> float:
    if x.size != y.size:
        raise ValueError(
            f"{what} cardinality mismatch: {x.size} vs {y.size}"
        )
    if x.size == 0:
        return 0.0
    diff = np.abs(x - y)
    if math.isinf(p):
        return float(diff.max())
    if p == 1.0:
        return float(diff.sum())
    if p == 2.0:
        return float(np.sqrt(np.sum(diff * diff)))
    return float(np.sum(diff**p) ** (1.0 / p))


def wasserstein_births(
    g1: GraphPersistence, g2: GraphPersistence, p=2.0
) -> float:
    """p-Wasserstein distance between birth sets (p >= 1, or inf for the max)."""
    p = _check_p(p)
    return _lp_distance(g1.births, g2.births, p, "birth")


def wasserstein_deaths(
    g1: GraphPersistence, g2: GraphPersistence, p=2.0
) -> float:
    """p-Wasserstein distance between death sets (p >= 1, or inf for the max)."""
    p = _check_p(p)
    return _lp_distance(g1.deaths, g2.deaths, p, "death")


def combined_sq_distance(g1: GraphPersistence, g2: GraphPersistence) -> float:
    """Squared 2-Wasserstein distance summed over births and deaths.

    This is the clustering metric: W2(births)^2 + W2(deaths)^2, i.e. the
    squared Euclidean distance between the concatenated sorted vectors.
    """
    if g1.births.size != g2.births.size:
        raise ValueError(
            f"birth cardinality mismatch: {g1.births.size} vs {g2.births.size}"
        )
    if g1.deaths.size != g2.deaths.size:
        raise ValueError(
            f"death cardinality mismatch: {g1.deaths.size} vs {g2.deaths.size}"
        )
    db = g1.births - g2.births
    dd = g1.deaths - g2.deaths
    return float(np.sum(db * db) + np.sum(dd * dd))


def _check_aligned(items: list[GraphPersistence]) -> None:
    if not items:
        raise ValueError("need at least one persistence summary")
    first = items[0]
    for it in items[1:]:
        if it.n_nodes != first.n_nodes or it.deaths.size != first.deaths.size:
            raise ValueError(
                "summaries are not cardinality-compatible: "
                f"({first.n_nodes} nodes, {first.deaths.size} deaths) vs "
                f"({it.n_nodes} nodes, {it.deaths.size} deaths)"
            )


def barycenter(items: list[GraphPersistence]) -> PersistenceBarycenter:
    """Minimizer of the summed squared 2-Wasserstein distance.

    The closed form is the elementwise mean of the sorted vectors, which
    stays sorted.
    """
    _check_aligned(items)
    mb = np.mean([it.births for it in items], axis=0)
    if items[0].deaths.size:
        md = np.mean([it.deaths for it in items], axis=0)
    else:
        md = np.empty(0, dtype=np.float64)
    return PersistenceBarycenter(items[0].n_nodes, mb, md, len(items))


def variance(items: list[GraphPersistence]) -> PersistenceVariance:
    """Mean squared L2 deviation from the barycenter, per component."""
    _check_aligned(items)
    center = barycenter(items)
    vb = float(
        np.mean([np.sum((it.births - center.mean_births) ** 2) for it in items])
    )
    if items[0].deaths.size:
        vd = float(
            np.mean(
                [np.sum((it.deaths - center.mean_deaths) ** 2) for it in items]
            )
        )
    else:
        vd = 0.0
    return PersistenceVariance(vb, vd)


def grad_sq_w2_births(
    g_var: GraphPersistence, g_fixed: GraphPersistence
) -> np.ndarray:
    """Gradient of W2(births)^2 with respect to g_var's sorted birth vector.

    Entry l is 2 * (b_var[l] - b_fixed[l]).
    """
    if g_var.births.size != g_fixed.births.size:
        raise ValueError(
            f"birth cardinality mismatch: {g_var.births.size} vs "
            f"{g_fixed.births.size}"
        )
    return 2.0 * (g_var.births - g_fixed.births)


def pairwise_combined_sq(items: list[GraphPersistence]) -> np.ndarray:
    """Symmetric matrix of combined squared distances, zero diagonal."""
    _check_aligned(items)
    n = len(items)
    out = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            d = combined_sq_distance(items[i], items[j])
            out[i, j] = d
            out[j, i] = d
    return out
