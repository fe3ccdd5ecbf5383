"""Single-network training with a validation accuracy gate."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import torch
from torch import nn

from .config import TrainConfig
from .data import split_train_val
from .model import MLP


@dataclass
class TrainedNetwork:
    index: int
    seed: int
    model: MLP | None
    val_accuracy: float
    skipped: bool
    reason: str = ""
    # feature normalization fitted on this network's training split
    norm_mean: np.ndarray = field(default_factory=lambda: np.zeros(0))
    norm_std: np.ndarray = field(default_factory=lambda: np.ones(0))


def _accuracy(model: MLP, x: torch.Tensor, y: torch.Tensor) -> float:
    model.eval()
    with torch.no_grad():
        pred = model(x).argmax(dim=1)
    return float((pred == y).double().mean())


def train_network(
    cfg: TrainConfig, index: int, train_x, train_y, n_classes: int
) -> TrainedNetwork:
    """Train one network; skip it on divergence or a failed accuracy gate."""
    seed = cfg.seed * 1000 + index
    torch.manual_seed(seed)

    (fit_x, fit_y), (val_x, val_y) = split_train_val(
        train_x, train_y, cfg.val_fraction, seed
    )
    mean = fit_x.mean(axis=0)
    std = fit_x.std(axis=0)
    std[std == 0.0] = 1.0
    fit_xt = torch.from_numpy((fit_x - mean) / std).float()
    fit_yt = torch.from_numpy(fit_y).long()
    val_xt = torch.from_numpy((val_x - mean) / std).float()
    val_yt = torch.from_numpy(val_y).long()

    model = MLP(
        fit_x.shape[1], cfg.hidden_sizes, n_classes,
        cfg.strategy, cfg.resolved_param,
    )
    weight_decay = cfg.resolved_param if cfg.strategy == "l2" else 0.0
    optimizer = torch.optim.SGD(
        model.parameters(), lr=cfg.learning_rate,
        momentum=cfg.momentum, weight_decay=weight_decay,
    )
    loss_fn = nn.CrossEntropyLoss()
    shuffler = torch.Generator().manual_seed(seed)

    n = fit_xt.shape[0]
    for _ in range(cfg.epochs):
        model.train()
        order = torch.randperm(n, generator=shuffler)
        for start in range(0, n, cfg.batch_size):
            batch = order[start : start + cfg.batch_size]
            optimizer.zero_grad()
            loss = loss_fn(model(fit_xt[batch]), fit_yt[batch])
            if not math.isfinite(loss.item()):
                return TrainedNetwork(
                    index, seed, None, 0.0, True, "training diverged"
                )
            loss.backward()
            optimizer.step()

    acc = _accuracy(model, val_xt, val_yt)
    if acc < cfg.min_accuracy:
        return TrainedNetwork(
            index, seed, None, acc, True,
            f"validation accuracy {acc:.3f} below {cfg.min_accuracy}",
        )
    model.eval()
    return TrainedNetwork(index, seed, model, acc, False, "", mean, std)


def functional_activations(net: TrainedNetwork, func_x: np.ndarray) -> np.ndarray:
    """Hidden activations on functional data, normalized as during training."""
    scaled = (func_x - net.norm_mean) / net.norm_std
    with torch.no_grad():
        acts = net.model.hidden_activations(torch.from_numpy(scaled).float())
    return acts.numpy().astype(np.float64)
