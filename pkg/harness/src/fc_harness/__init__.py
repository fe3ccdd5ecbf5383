"""Desk-scale MLP training and activation extraction harness."""

__version__ = "0.1.0"

from .config import STRATEGIES, TrainConfig
from .extraction import train_and_extract, write_activation_csv
from .model import MLP
from .training import TrainedNetwork, functional_activations, train_network

__all__ = [
    "MLP",
    "STRATEGIES",
    "TrainConfig",
    "TrainedNetwork",
    "functional_activations",
    "train_and_extract",
    "train_network",
    "write_activation_csv",
]
