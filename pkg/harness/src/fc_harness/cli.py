"""Command line entry: train networks and dump activation CSVs."""

from __future__ import annotations

import argparse
import sys

from .config import STRATEGIES, TrainConfig
from .extraction import train_and_extract


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fc-harness",
        description="Train small MLPs under a regularization strategy and "
        "export hidden-neuron activation CSVs.",
    )
    parser.add_argument("--config", help="TrainConfig JSON; flags override it")
    parser.add_argument("--strategy", choices=STRATEGIES)
    parser.add_argument("--networks", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--epochs", type=int)
    parser.add_argument("--out", required=True, help="output directory")
    args = parser.parse_args(argv)

    try:
        cfg = TrainConfig.from_json(args.config) if args.config else TrainConfig()
        overrides = {}
        if args.strategy is not None:
            overrides["strategy"] = args.strategy
        if args.networks is not None:
            overrides["n_networks"] = args.networks
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.epochs is not None:
            overrides["epochs"] = args.epochs
        if overrides:
            doc = cfg.to_dict()
            doc.update(overrides)
            doc["hidden_sizes"] = tuple(doc["hidden_sizes"])
            cfg = TrainConfig(**doc)
        meta = train_and_extract(cfg, args.out)
    except ValueError as exc:
        print(f"fc-harness: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fc-harness: {exc}", file=sys.stderr)
        return 3

    trained = [n for n in meta["networks"] if not n["skipped"]]
    skipped = [n for n in meta["networks"] if n["skipped"]]
    print(
        f"trained {len(trained)}/{len(meta['networks'])} networks "
        f"({meta['config']['strategy']}), "
        f"accuracies {[round(n['val_accuracy'], 3) for n in trained]}"
    )
    for n in skipped:
        print(f"skipped network {n['index']}: {n['reason']}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
