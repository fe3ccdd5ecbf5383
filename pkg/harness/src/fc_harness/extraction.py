"""Train networks and export activation CSVs consumable by the topofc CLI.

For every trained network two extraction modes run: the whole functional
set (one CSV per network, used for strategy-level analyses) and one CSV
per class (used for stimulus-level analyses). Only hidden fully-connected
neurons contribute columns. CSV layout follows the activation-matrix
interface: a neuron_0..neuron_{M-1} header, one sample per row, repr
floats.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import torch

from .config import TrainConfig
from .data import class_indices, load_dataset, split_train_functional
from .training import TrainedNetwork, functional_activations, train_network


def write_activation_csv(path, values: np.ndarray) -> None:
    m = values.shape[1]
    header = ",".join(f"neuron_{j}" for j in range(m))
    with open(path, "w", newline="") as fh:
        fh.write(header + "\n")
        for row in values:
            fh.write(",".join(repr(float(x)) for x in row) + "\n")


def train_and_extract(cfg: TrainConfig, out_dir) -> dict:
    """Train cfg.n_networks networks and write activation CSVs + metadata.

    Returns the metadata document (also written to metadata.json). Networks
    that diverge or miss the accuracy gate are reported and skipped; their
    files are simply absent. Training runs single threaded and sequentially
    so a fixed seed reproduces every byte.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    torch.set_num_threads(1)

    x, y = load_dataset(cfg.dataset)
    n_classes = int(np.unique(y).size)
    (train_x, train_y), (func_x, func_y) = split_train_functional(
        x, y, cfg.train_fraction, cfg.seed
    )
    per_class = class_indices(func_y)

    networks = []
    for index in range(cfg.n_networks):
        net: TrainedNetwork = train_network(
            cfg, index, train_x, train_y, n_classes
        )
        entry = {
            "index": index,
            "seed": net.seed,
            "val_accuracy": net.val_accuracy,
            "skipped": net.skipped,
            "reason": net.reason,
            "full_csv": None,
            "class_csvs": {},
        }
        if not net.skipped:
            acts = functional_activations(net, func_x)
            full_name = f"net{index:02d}_full.csv"
            write_activation_csv(out_dir / full_name, acts)
            entry["full_csv"] = full_name
            for cls, idx in per_class.items():
                cls_name = f"net{index:02d}_class{cls}.csv"
                write_activation_csv(out_dir / cls_name, acts[idx])
                entry["class_csvs"][str(cls)] = cls_name
        networks.append(entry)

    meta = {
        "config": cfg.to_dict(),
        "n_classes": n_classes,
        "n_functional_samples": int(func_x.shape[0]),
        "n_neurons": cfg.n_neurons,
        "networks": networks,
    }
    (out_dir / "metadata.json").write_text(json.dumps(meta, indent=2) + "\n")
    return meta
