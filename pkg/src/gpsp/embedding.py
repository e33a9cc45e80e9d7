"""Embedding containers, training hyperparameters, and embedding file I/O.

Text format: first line ``<node_count> <dim>``, then one ``<node_id> <v1>
... <v_dim>`` row per node with full round-trip float precision. The binary
format (for large runs) is little-endian: two uint64 for count and dim, then
per row a uint16 id byte length, the UTF-8 id, and ``dim`` float64 values.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

PROVENANCES = ("homogeneous", "projective", "final")
LINE_ORDERS = ("1", "2", "1+2")


@dataclass
class TrainConfig:
    """Hyperparameters shared by the walk-based and edge-sampling trainers.

    Defaults: 128 dimensions, 10 walks of length 40 per node, window 5 and
    5 negative samples, 5 epochs with the learning rate decaying linearly
    from 0.025 to 0.0001. LINE runs default to concatenating first- and
    second-order halves ("1+2"), which requires an even ``dim``.
    """

    dim: int = 128
    walks_per_node: int = 10
    walk_length: int = 40
    window: int = 5
    negatives: int = 5
    epochs: int = 5
    learning_rate: float = 0.025
    min_learning_rate: float = 0.0001
    seed: int = 0
    line_order: str = "1+2"
    line_sample_factor: int = 100
    batch_size: int = 1024

    def __post_init__(self):
        for name in ("dim", "walks_per_node", "walk_length", "window", "epochs",
                     "line_sample_factor", "batch_size"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.negatives < 0:
            raise ValueError("negatives must be >= 0")
        if not 0 < self.min_learning_rate <= self.learning_rate:
            raise ValueError("need 0 < min_learning_rate <= learning_rate")
        if self.line_order not in LINE_ORDERS:
            raise ValueError(f"line_order must be one of {LINE_ORDERS}")
        if self.line_order == "1+2" and self.dim % 2:
            raise ValueError("dim must be even when line_order is '1+2'")


@dataclass
class EmbeddingMatrix:
    """Dense node-id -> vector map tagged with its producing stage and space.

    ``provenance`` is one of ``homogeneous``, ``projective``, or ``final``;
    ``space_label`` names the latent space the vectors live in (the label of
    the homogeneous subnetwork that defined it).
    """

    ids: list[str]
    matrix: np.ndarray
    provenance: str
    space_label: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.float64)
        if self.matrix.ndim != 2 or self.matrix.shape[0] != len(self.ids):
            raise ValueError("matrix must be (len(ids), dim)")
        if not np.all(np.isfinite(self.matrix)):
            raise ValueError("embedding contains non-finite entries")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"provenance must be one of {PROVENANCES}")
        self.row_of = {node_id: i for i, node_id in enumerate(self.ids)}
        if len(self.row_of) != len(self.ids):
            raise ValueError("duplicate ids in embedding")

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[1])

    def __len__(self):
        return len(self.ids)

    def __contains__(self, node_id):
        return node_id in self.row_of

    def vector(self, node_id: str) -> np.ndarray:
        return self.matrix[self.row_of[node_id]]

    def write(self, path, binary: bool = False) -> None:
        if binary:
            with open(path, "wb") as fh:
                fh.write(struct.pack("<QQ", len(self.ids), self.dim))
                for node_id, row in zip(self.ids, self.matrix):
                    raw = node_id.encode("utf-8")
                    fh.write(struct.pack("<H", len(raw)))
                    fh.write(raw)
                    fh.write(struct.pack(f"<{self.dim}d", *row))
            return
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"{len(self.ids)} {self.dim}\n")
            for node_id, row in zip(self.ids, self.matrix):
                fh.write(node_id + " " + " ".join(repr(float(x)) for x in row) + "\n")


def read_embedding(path, provenance: str = "homogeneous", space_label: str = "",
                   binary: bool = False, meta: dict | None = None) -> EmbeddingMatrix:
    """Read an embedding file written by :meth:`EmbeddingMatrix.write`."""
    ids: list[str] = []
    if binary:
        with open(path, "rb") as fh:
            count, dim = struct.unpack("<QQ", fh.read(16))
            matrix = np.empty((count, dim), dtype=np.float64)
            for i in range(count):
                (id_len,) = struct.unpack("<H", fh.read(2))
                ids.append(fh.read(id_len).decode("utf-8"))
                matrix[i] = struct.unpack(f"<{dim}d", fh.read(8 * dim))
    else:
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().split()
            if len(header) != 2:
                raise ValueError(f"{path}: bad embedding header")
            count, dim = int(header[0]), int(header[1])
            matrix = np.empty((count, dim), dtype=np.float64)
            for i in range(count):
                parts = fh.readline().split()
                if len(parts) != dim + 1:
                    raise ValueError(f"{path}: row {i} has {len(parts) - 1} values, expected {dim}")
                ids.append(parts[0])
                matrix[i] = [float(x) for x in parts[1:]]
    return EmbeddingMatrix(ids, matrix, provenance, space_label, meta or {})


__all__ = ["TrainConfig", "EmbeddingMatrix", "read_embedding", "PROVENANCES", "LINE_ORDERS"]
