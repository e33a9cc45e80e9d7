"""Truncated random walks over a homogeneous subnetwork.

Transitions are weight-proportional (uniform on unweighted graphs). All
walks advance in lockstep through vectorized alias draws, so generation is
deterministic for a fixed seed and fast without worker parallelism; walk
order in the corpus carries no meaning (training shuffles pairs anyway).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alias import AliasTable
from .embedding import TrainConfig
from .partition import Subnetwork


@dataclass
class WalkCorpus:
    """Walks as local-index sequences plus the local -> node id mapping."""

    walks: list[np.ndarray]
    node_ids: list[str]
    source: str

    def __len__(self):
        return len(self.walks)


def generate_walks(subnet: Subnetwork, cfg: TrainConfig,
                   rng: np.random.Generator | None = None) -> WalkCorpus:
    """Start ``walks_per_node`` walks of ``walk_length`` nodes at every node.

    Every subnetwork node participates in at least one edge, so every node
    starts walks; a walk stops early only when it reaches a node with no
    out-neighbors (possible only with directed edge types).
    """
    if not subnet.is_homogeneous:
        raise ValueError(
            f"walks are defined on homogeneous subnetworks, got bipartite {subnet.label!r}"
        )
    if rng is None:
        rng = np.random.default_rng(cfg.seed)

    neighbors, weights = subnet.adjacency()
    n = subnet.node_count

    # Flattened per-node alias tables so all walks can step at once.
    degs = np.array([len(nb) for nb in neighbors], dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(degs)])
    flat_neighbors = np.concatenate([nb for nb in neighbors if len(nb)] or [np.array([], dtype=np.int64)])
    prob = np.empty(offsets[-1], dtype=np.float64)
    alias = np.empty(offsets[-1], dtype=np.int64)
    for i in range(n):
        if degs[i] == 0:
            continue
        table = AliasTable(weights[i])
        prob[offsets[i] : offsets[i + 1]] = table.prob
        alias[offsets[i] : offsets[i + 1]] = table.alias

    starts = np.tile(np.arange(n, dtype=np.int64), cfg.walks_per_node)
    total = starts.size
    path = np.full((total, cfg.walk_length), -1, dtype=np.int64)
    path[:, 0] = starts

    cur = starts.copy()
    alive = np.arange(total)
    for step in range(1, cfg.walk_length):
        can_move = degs[cur] > 0
        alive = alive[can_move]
        if alive.size == 0:
            break
        cur = cur[can_move]
        deg = degs[cur]
        slot = np.minimum((rng.random(alive.size) * deg).astype(np.int64), deg - 1)
        at = offsets[cur] + slot
        take = np.where(rng.random(alive.size) < prob[at], slot, alias[at])
        cur = flat_neighbors[offsets[cur] + take]
        path[alive, step] = cur

    walks = [row[row >= 0] for row in path]
    return WalkCorpus(walks=walks, node_ids=list(subnet.node_ids), source=subnet.label)


__all__ = ["WalkCorpus", "generate_walks"]
