import json
import subprocess
import sys
from pathlib import Path

import pytest

from fc_harness.config import TrainConfig
from fc_harness.extraction import train_and_extract

DRIVER = Path(__file__).parent / "cli_driver.py"


def run_topofc(commands) -> None:
    """Run a batch of topofc CLI invocations in one subprocess."""
    proc = subprocess.run(
        [sys.executable, str(DRIVER)],
        input=json.dumps(commands),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr


@pytest.fixture(scope="session")
def study_dirs(tmp_path_factory):
    """Ten trained networks each for vanilla and batchnorm, with CSVs."""
    root = tmp_path_factory.mktemp("networks")
    metas = {}
    for strategy, seed in (("vanilla", 0), ("batchnorm", 1)):
        out = root / strategy
        cfg = TrainConfig(strategy=strategy, n_networks=10, seed=seed)
        metas[strategy] = train_and_extract(cfg, out)
    return root, metas


def pytest_runtest_logreport(report):
    """One visible pass/fail line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    status = "PASS" if report.passed else "FAIL"
    print(f"\n[acceptance] {name}: {status}", flush=True)
