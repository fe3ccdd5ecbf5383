"""Small feedforward classifiers with pluggable regularization."""

from __future__ import annotations

import torch
from torch import nn


class MLP(nn.Module):
    """Fully-connected net with leaky-ReLU hidden blocks.

    Each hidden block is affine -> [batch norm] -> leaky ReLU -> [dropout]
    depending on the strategy; the block output is what counts as the
    neuron activation. L2 regularization is applied through the optimizer's
    weight decay, so its architecture matches vanilla.
    """

    def __init__(self, n_inputs: int, hidden_sizes, n_classes: int,
                 strategy: str, param: float):
        super().__init__()
        blocks = []
        width_in = n_inputs
        for width in hidden_sizes:
            layers = [nn.Linear(width_in, width)]
            if strategy == "batchnorm":
                layers.append(nn.BatchNorm1d(width))
            layers.append(nn.LeakyReLU())
            if strategy == "dropout":
                layers.append(nn.Dropout(param))
            blocks.append(nn.Sequential(*layers))
            width_in = width
        self.blocks = nn.ModuleList(blocks)
        self.head = nn.Linear(width_in, n_classes)

    def forward(self, x):
        for block in self.blocks:
            x = block(x)
        return self.head(x)

    @torch.no_grad()
    def hidden_activations(self, x) -> torch.Tensor:
        """Concatenated outputs of all hidden blocks (eval mode expected)."""
        outs = []
        for block in self.blocks:
            x = block(x)
            outs.append(x)
        return torch.cat(outs, dim=1)
