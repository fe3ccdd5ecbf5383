"""File formats: activation CSV, little-endian binary containers, JSON.

Binary containers carry a 4-byte magic, unsigned little-endian sizes, and
float64 payloads. Text formats write floats with repr so every round trip
is bit-exact.
"""

from __future__ import annotations

import csv
import json
import struct
from pathlib import Path

import numpy as np

from .connectome import ActivationMatrix, Connectome
from .homology import GraphPersistence

MAGIC_ACTIVATIONS = b"AMAT"
MAGIC_CONNECTOME = b"CONN"
MAGIC_PERSISTENCE = b"PERS"


class FormatError(Exception):
    """Corrupt or mistyped data file (bad magic, truncation, wrong payload)."""


def _float_cell(x: float) -> str:
    return repr(float(x))


def _read_exact(fh, count: int, path, what: str) -> bytes:
    buf = fh.read(count)
    if len(buf) != count:
        raise FormatError(f"{path}: truncated while reading {what}")
    return buf


def _floats(fh, count: int, path, what: str) -> np.ndarray:
    buf = _read_exact(fh, count * 8, path, what)
    return np.frombuffer(buf, dtype="<f8").astype(np.float64)


# --- activations ---------------------------------------------------------

def write_activations_csv(path, acts: ActivationMatrix) -> None:
    header = ",".join(f"neuron_{j}" for j in range(acts.n_neurons))
    with open(path, "w", newline="") as fh:
        fh.write(header + "\n")
        for row in acts.values:
            fh.write(",".join(_float_cell(x) for x in row) + "\n")


def read_activations_csv(path) -> ActivationMatrix:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file") from None
        expected = [f"neuron_{j}" for j in range(len(header))]
        if header != expected:
            raise ValueError(
                f"{path}: bad header, expected neuron_0..neuron_{len(header) - 1}"
            )
        m = len(header)
        rows = []
        for i, row in enumerate(reader, start=1):
            if len(row) != m:
                raise ValueError(
                    f"{path}: row {i} has {len(row)} columns, expected {m}"
                )
            try:
                values = [float(x) for x in row]
            except ValueError:
                raise ValueError(f"{path}: row {i} has a non-numeric cell") from None
            if not all(np.isfinite(values)):
                raise ValueError(f"{path}: row {i} has a non-finite value")
            rows.append(values)
    if len(rows) < 2:
        raise ValueError(f"{path}: need at least 2 data rows, got {len(rows)}")
    return ActivationMatrix(np.asarray(rows, dtype=np.float64))


def write_activations_bin(path, acts: ActivationMatrix) -> None:
    with open(path, "wb") as fh:
        fh.write(MAGIC_ACTIVATIONS)
        fh.write(struct.pack("<II", acts.n_samples, acts.n_neurons))
        fh.write(np.ascontiguousarray(acts.values, dtype="<f8").tobytes())


def read_activations_bin(path) -> ActivationMatrix:
    with open(path, "rb") as fh:
        magic = _read_exact(fh, 4, path, "magic")
        if magic != MAGIC_ACTIVATIONS:
            raise FormatError(f"{path}: bad magic {magic!r}, expected AMAT")
        n, m = struct.unpack("<II", _read_exact(fh, 8, path, "dimensions"))
        values = _floats(fh, n * m, path, "activation payload")
    return ActivationMatrix(values.reshape(n, m))


# --- connectomes ---------------------------------------------------------

def write_connectome_bin(path, conn: Connectome) -> None:
    with open(path, "wb") as fh:
        fh.write(MAGIC_CONNECTOME)
        fh.write(struct.pack("<I", conn.n_neurons))
        fh.write(np.ascontiguousarray(conn.weights, dtype="<f8").tobytes())


def read_connectome_bin(path) -> Connectome:
    with open(path, "rb") as fh:
        magic = _read_exact(fh, 4, path, "magic")
        if magic != MAGIC_CONNECTOME:
            raise FormatError(f"{path}: bad magic {magic!r}, expected CONN")
        (m,) = struct.unpack("<I", _read_exact(fh, 4, path, "size"))
        weights = _floats(fh, m * m, path, "weight payload")
    return Connectome(weights.reshape(m, m))


def write_connectome_json(path, conn: Connectome) -> None:
    doc = {
        "n_neurons": conn.n_neurons,
        "weights": [[float(x) for x in row] for row in conn.weights],
    }
    Path(path).write_text(json.dumps(doc) + "\n")


def read_connectome_json(path) -> Connectome:
    doc = json.loads(Path(path).read_text())
    try:
        m = doc["n_neurons"]
        weights = np.asarray(doc["weights"], dtype=np.float64)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{path}: not a connectome document ({exc})") from None
    if weights.shape != (m, m):
        raise FormatError(
            f"{path}: weights shape {weights.shape} does not match n_neurons={m}"
        )
    return Connectome(weights)


def read_connectome(path) -> Connectome:
    """Dispatch on extension: .json or binary CONN container."""
    if str(path).endswith(".json"):
        return read_connectome_json(path)
    return read_connectome_bin(path)


def write_connectome(path, conn: Connectome) -> None:
    if str(path).endswith(".json"):
        write_connectome_json(path, conn)
    else:
        write_connectome_bin(path, conn)


# --- persistence summaries -----------------------------------------------

def write_persistence_json(path, pers: GraphPersistence) -> None:
    doc = {
        "n_nodes": pers.n_nodes,
        "births": [float(x) for x in pers.births],
        "deaths": [float(x) for x in pers.deaths],
    }
    Path(path).write_text(json.dumps(doc) + "\n")


def read_persistence_json(path) -> GraphPersistence:
    doc = json.loads(Path(path).read_text())
    try:
        return GraphPersistence(
            doc["n_nodes"],
            np.asarray(doc["births"], dtype=np.float64),
            np.asarray(doc["deaths"], dtype=np.float64),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{path}: not a persistence document ({exc})") from None


def write_persistence_bin(path, pers: GraphPersistence) -> None:
    with open(path, "wb") as fh:
        fh.write(MAGIC_PERSISTENCE)
        fh.write(struct.pack("<I", pers.n_nodes))
        fh.write(struct.pack("<Q", pers.births.size))
        fh.write(np.ascontiguousarray(pers.births, dtype="<f8").tobytes())
        fh.write(struct.pack("<Q", pers.deaths.size))
        fh.write(np.ascontiguousarray(pers.deaths, dtype="<f8").tobytes())


def read_persistence_bin(path) -> GraphPersistence:
    with open(path, "rb") as fh:
        magic = _read_exact(fh, 4, path, "magic")
        if magic != MAGIC_PERSISTENCE:
            raise FormatError(f"{path}: bad magic {magic!r}, expected PERS")
        (m,) = struct.unpack("<I", _read_exact(fh, 4, path, "node count"))
        (nb,) = struct.unpack("<Q", _read_exact(fh, 8, path, "birth count"))
        births = _floats(fh, nb, path, "births")
        (nd,) = struct.unpack("<Q", _read_exact(fh, 8, path, "death count"))
        deaths = _floats(fh, nd, path, "deaths")
    return GraphPersistence(m, births, deaths)


def read_persistence(path) -> GraphPersistence:
    if str(path).endswith(".json"):
        return read_persistence_json(path)
    return read_persistence_bin(path)


def write_persistence(path, pers: GraphPersistence) -> None:
    if str(path).endswith(".json"):
        write_persistence_json(path, pers)
    else:
        write_persistence_bin(path, pers)


# --- matrices, labels, reports -------------------------------------------

def write_matrix_csv(path, matrix: np.ndarray) -> None:
    with open(path, "w", newline="") as fh:
        for row in np.asarray(matrix, dtype=np.float64):
            fh.write(",".join(_float_cell(x) for x in row) + "\n")


def write_matrix_json(path, matrix: np.ndarray) -> None:
    m = np.asarray(matrix, dtype=np.float64)
    doc = {
        "n_items": m.shape[0],
        "distances": [[float(x) for x in row] for row in m],
    }
    Path(path).write_text(json.dumps(doc) + "\n")


def read_labels(path) -> list[str]:
    """One label per line; an optional leading 'label' header is skipped."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    if lines and lines[0] == "label":
        lines = lines[1:]
    if not lines:
        raise ValueError(f"{path}: no labels")
    return lines


def write_trials_csv(path, results) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("seed,purity,objective,iterations\n")
        for r in results:
            cell = "" if r.purity is None else _float_cell(r.purity)
            fh.write(
                f"{r.seed},{cell},{_float_cell(r.objective)},{r.n_iterations}\n"
            )
