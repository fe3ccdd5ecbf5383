"""Dataset loading and the train/functional split.

The bundled scikit-learn digits set (1797 8x8 grayscale images, 10
classes) serves as the desk-scale dataset; it ships with the library, so
no network access is needed.
"""

from __future__ import annotations

import numpy as np


def load_dataset(name: str):
    if name != "digits":
        raise ValueError(f"unknown dataset {name!r} (available: digits)")
    from sklearn.datasets import load_digits

    bundle = load_digits()
    return bundle.data.astype(np.float64), bundle.target.astype(np.int64)


def split_train_functional(x, y, train_fraction: float, seed: int):
    """Disjoint train/functional split, deterministic for a given seed."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(x))
    cut = int(round(len(x) * train_fraction))
    train_idx, func_idx = order[:cut], order[cut:]
    return (x[train_idx], y[train_idx]), (x[func_idx], y[func_idx])


def split_train_val(x, y, val_fraction: float, seed: int):
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(x))
    cut = int(round(len(x) * (1.0 - val_fraction)))
    fit_idx, val_idx = order[:cut], order[cut:]
    return (x[fit_idx], y[fit_idx]), (x[val_idx], y[val_idx])


def standardize(train_x, *others):
    """Feature-wise standardization fitted on the training portion."""
    mean = train_x.mean(axis=0)
    std = train_x.std(axis=0)
    std[std == 0.0] = 1.0
    return tuple((arr - mean) / std for arr in (train_x, *others))


def class_indices(y) -> dict:
    return {int(c): np.flatnonzero(y == c) for c in np.unique(y)}
