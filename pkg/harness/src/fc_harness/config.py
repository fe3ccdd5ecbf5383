"""Training configuration."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

STRATEGIES = ("vanilla", "batchnorm", "dropout", "l2")

# documented defaults for the strategy hyperparameter
_DEFAULT_PARAM = {"dropout": 0.25, "l2": 5e-4}


@dataclass(frozen=True)
class TrainConfig:
    dataset: str = "digits"
    hidden_sizes: tuple = (64, 32)
    strategy: str = "vanilla"
    strategy_param: float | None = None
    n_networks: int = 10
    train_fraction: float = 0.5
    val_fraction: float = 0.2
    min_accuracy: float = 0.85
    epochs: int = 60
    batch_size: int = 64
    learning_rate: float = 0.1
    momentum: float = 0.9
    seed: int = 0

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(
                f"strategy must be one of {STRATEGIES}, got {self.strategy!r}"
            )
        sizes = tuple(int(h) for h in self.hidden_sizes)
        if not sizes or any(h <= 0 for h in sizes):
            raise ValueError("hidden sizes must be positive")
        object.__setattr__(self, "hidden_sizes", sizes)
        if not 0.0 < self.train_fraction < 1.0:
            raise ValueError("train_fraction must be in (0, 1)")
        if not 0.0 < self.val_fraction < 1.0:
            raise ValueError("val_fraction must be in (0, 1)")
        if self.n_networks < 1:
            raise ValueError("need at least one network")

    @property
    def resolved_param(self) -> float:
        if self.strategy_param is not None:
            return self.strategy_param
        return _DEFAULT_PARAM.get(self.strategy, 0.0)

    @property
    def n_neurons(self) -> int:
        return sum(self.hidden_sizes)

    def to_dict(self) -> dict:
        doc = asdict(self)
        doc["hidden_sizes"] = list(self.hidden_sizes)
        return doc

    @classmethod
    def from_json(cls, path) -> "TrainConfig":
        doc = json.loads(Path(path).read_text())
        if "hidden_sizes" in doc:
            doc["hidden_sizes"] = tuple(doc["hidden_sizes"])
        return cls(**doc)
