"""Edge-sampling trainer preserving first- and second-order proximity (LINE).

Edges are drawn weight-proportionally through an alias table (undirected
edges are expanded to both orientations); negatives come from the weighted
degree distribution raised to 0.75. First-order training aligns the two
endpoint vectors directly; second-order training predicts context vectors,
which are discarded at the end. Order "1+2" trains both halves at dim/2 and
concatenates.
"""

from __future__ import annotations

import numpy as np

from .alias import AliasTable
from .embedding import EmbeddingMatrix, TrainConfig
from .partition import Subnetwork
from .sgd import batch_update, init_matrices, linear_lr, pair_gradients, pair_loss

# Per-sample objectives for the gradient checks. Both orders share the pair
# form; they differ only in which parameter matrix the vectors come from.
first_order_loss = pair_loss
first_order_gradients = pair_gradients
second_order_loss = pair_loss
second_order_gradients = pair_gradients


def _directed_samples(subnet: Subnetwork):
    """Expand undirected edges to both orientations for edge sampling."""
    src = subnet.edges[:, 0]
    dst = subnet.edges[:, 1]
    w = subnet.weights
    back = (~subnet.directed) & (src != dst)
    all_src = np.concatenate([src, dst[back]])
    all_dst = np.concatenate([dst, src[back]])
    all_w = np.concatenate([w, w[back]])
    return all_src, all_dst, all_w


def _train_one_order(subnet, cfg, dim, order, seed):
    src, dst, w = _directed_samples(subnet)
    n = subnet.node_count
    out_weight = np.bincount(src, weights=w, minlength=n)
    # Isolated rows cannot occur (every subnetwork node touches an edge), but
    # directed-only-inbound nodes can have zero out-weight; the noise
    # distribution uses total weighted degree instead.
    in_weight = np.bincount(dst, weights=w, minlength=n)
    noise = AliasTable((out_weight + in_weight) ** 0.75)
    edge_table = AliasTable(w)

    rng = np.random.default_rng(seed)
    emb_in, emb_out = init_matrices(n, dim, rng, zero_output=(order == "2"))
    if order == "1":
        emb_out = emb_in  # one shared matrix: endpoints live in the same space

    total = cfg.line_sample_factor * src.size
    batches = (total + cfg.batch_size - 1) // cfg.batch_size
    chunk = max(1, batches // cfg.epochs)
    epoch_losses = []
    chunk_loss, chunk_pairs = 0.0, 0
    for b in range(batches):
        size = min(cfg.batch_size, total - b * cfg.batch_size)
        picks = edge_table.sample(rng, size)
        negs = noise.sample(rng, size=(size, cfg.negatives))
        lr = linear_lr(b, batches, cfg.learning_rate, cfg.min_learning_rate)
        chunk_loss += batch_update(emb_in, emb_out, src[picks], dst[picks], negs, lr)
        chunk_pairs += size
        if (b + 1) % chunk == 0 or b == batches - 1:
            epoch_losses.append(chunk_loss / chunk_pairs)
            chunk_loss, chunk_pairs = 0.0, 0
    return emb_in, epoch_losses


def train_line(subnet: Subnetwork, cfg: TrainConfig) -> EmbeddingMatrix:
    """Train LINE vectors for a homogeneous subnetwork.

    ``cfg.line_order`` selects first order, second order, or the
    concatenation of both halves; ``meta["epoch_losses"]`` maps each trained
    order to its chunked mean-loss trace.
    """
    if not subnet.is_homogeneous:
        raise ValueError(
            f"LINE training is defined on homogeneous subnetworks, got {subnet.label!r}"
        )
    if subnet.edges.shape[0] == 0 or subnet.total_weight() <= 0:
        raise ValueError("cannot train on an empty subnetwork")

    if cfg.line_order == "1+2":
        parts, losses = [], {}
        for order, seed_shift in (("1", 0), ("2", 1)):
            emb, trace = _train_one_order(subnet, cfg, cfg.dim // 2, order, cfg.seed + seed_shift)
            parts.append(emb)
            losses[order] = trace
        matrix = np.concatenate(parts, axis=1)
    else:
        matrix, trace = _train_one_order(subnet, cfg, cfg.dim, cfg.line_order, cfg.seed)
        losses = {cfg.line_order: trace}

    return EmbeddingMatrix(list(subnet.node_ids), matrix, "homogeneous", subnet.label,
                           meta={"epoch_losses": losses})


__all__ = [
    "train_line",
    "first_order_loss",
    "first_order_gradients",
    "second_order_loss",
    "second_order_gradients",
]
