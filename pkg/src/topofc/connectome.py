"""Functional connectomes from neuron activation data.

Feeding a held-out dataset through a trained network yields, for each hidden
neuron, a vector of outputs over the samples. The functional connectome is
the matrix of absolute Pearson correlations between those vectors: a complete
weighted graph over neurons with a zero diagonal and weights in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ActivationMatrix:
    """N samples x M neurons of real-valued neuron outputs.

    Row i holds the outputs of all neurons for sample i; column j is the
    output vector of neuron j over the whole dataset.
    """

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 2:
            raise ValueError(f"activations must be 2-D, got shape {v.shape}")
        if v.shape[0] < 2:
            raise ValueError(
                f"need at least 2 samples for correlation, got {v.shape[0]}"
            )
        if v.shape[1] < 1:
            raise ValueError("need at least 1 neuron column")
        if not np.isfinite(v).all():
            raise ValueError("activations contain NaN or Inf")
        object.__setattr__(self, "values", v)

    @property
    def n_samples(self) -> int:
        return self.values.shape[0]

    @property
    def n_neurons(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class Connectome:
    """M x M symmetric weight matrix with zero diagonal and entries in [0, 1]."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError(f"weights must be square, got shape {w.shape}")
        if not np.isfinite(w).all():
            raise ValueError("weights contain NaN or Inf")
        if not np.array_equal(w, w.T):
            raise ValueError("weights must be exactly symmetric")
        if np.any(np.diagonal(w) != 0.0):
            raise ValueError("diagonal must be zero")
        if w.size and (w.min() < 0.0 or w.max() > 1.0):
            raise ValueError("weights must lie in [0, 1]")
        object.__setattr__(self, "weights", w)

    @property
    def n_neurons(self) -> int:
        return self.weights.shape[0]


def pearson(a, b) -> float:
    """Pearson correlation between two equal-length vectors, in [-1, 1].

    Computed in two passes (means, then centered sums) in float64. Returns
    0.0 when either vector has zero variance: a constant neuron carries no
    functional signal. The result is clamped to [-1, 1] to absorb
    floating-point overshoot.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1 or a.shape[0] != b.shape[0]:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    n = a.shape[0]
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    if not (np.isfinite(a).all() and np.isfinite(b).all()):
        raise ValueError("inputs contain NaN or Inf")

    ac = a - a.mean()
    bc = b - b.mean()
    sa = float(ac @ ac)
    sb = float(bc @ bc)
    if sa == 0.0 or sb == 0.0:
        return 0.0
    denom = float(np.sqrt(sa * sb))
    if not np.isfinite(denom):
        denom = float(np.sqrt(sa)) * float(np.sqrt(sb))
    r = float(ac @ bc) / denom
    return min(1.0, max(-1.0, r))


def build_connectome(acts: ActivationMatrix) -> Connectome:
    """Absolute pairwise Pearson correlations with a zero diagonal.

    Entry (j, k) is |pearson(column j, column k)| for j != k. Zero-variance
    columns yield zero rows/columns. The matrix is symmetric by construction
    (upper triangle mirrored) and all entries lie in [0, 1].
    """
    v = acts.values
    centered = v - v.mean(axis=0)
    sq = np.einsum("ij,ij->j", centered, centered)
    gram = centered.T @ centered
    denom = np.sqrt(np.outer(sq, sq))
    with np.errstate(invalid="ignore", divide="ignore"):
        corr = np.where(denom > 0.0, gram / denom, 0.0)
    w = np.clip(np.abs(corr), 0.0, 1.0)
    # mirror the upper triangle so symmetry is exact, not just up to rounding
    w = np.triu(w, 1)
    w = w + w.T
    return Connectome(w)
