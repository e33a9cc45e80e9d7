"""Skip-gram with negative sampling over a walk corpus (DeepWalk training).

Every (center, context) pair within the window is a positive sample;
negatives are drawn from the corpus unigram distribution raised to 0.75.
Pairs are shuffled and re-drawn negatives each epoch; updates run in
mini-batches with gradients taken at the pre-batch parameters.
"""

from __future__ import annotations

import numpy as np

from .alias import AliasTable
from .embedding import EmbeddingMatrix, TrainConfig
from .sgd import batch_update, init_matrices, linear_lr, pair_gradients, pair_loss
from .walks import WalkCorpus

# Pure per-sample objective, shared with the edge-sampling trainer and used
# by the finite-difference gradient checks.
sgns_loss = pair_loss
sgns_gradients = pair_gradients


def negative_sampling_table(counts, power: float = 0.75) -> AliasTable:
    """Alias table over ``counts ** power`` (the noise distribution)."""
    counts = np.asarray(counts, dtype=np.float64)
    return AliasTable(counts**power)


def corpus_pairs(corpus: WalkCorpus, window: int):
    """All ordered (center, context) pairs with distance <= window."""
    centers, contexts = [], []
    for walk in corpus.walks:
        for off in range(1, min(window, len(walk) - 1) + 1):
            a, b = walk[:-off], walk[off:]
            centers.append(a)
            contexts.append(b)
            centers.append(b)
            contexts.append(a)
    if not centers:
        empty = np.array([], dtype=np.int64)
        return empty, empty
    return np.concatenate(centers), np.concatenate(contexts)


def train_skipgram(corpus: WalkCorpus, cfg: TrainConfig) -> EmbeddingMatrix:
    """Train and return input-side vectors for all nodes appearing in walks.

    The returned matrix records the mean per-pair loss of every epoch in
    ``meta["epoch_losses"]``; context vectors are discarded.
    """
    if not corpus.walks or all(len(w) == 0 for w in corpus.walks):
        raise ValueError("empty walk corpus")

    tokens = np.concatenate([w for w in corpus.walks if len(w)])
    vocab = np.unique(tokens)
    row_of_local = np.full(int(vocab.max()) + 1, -1, dtype=np.int64)
    row_of_local[vocab] = np.arange(vocab.size)

    counts = np.bincount(row_of_local[tokens], minlength=vocab.size)
    noise = negative_sampling_table(counts)

    centers, contexts = corpus_pairs(corpus, cfg.window)
    rng = np.random.default_rng(cfg.seed)
    emb_in, emb_out = init_matrices(vocab.size, cfg.dim, rng)

    if centers.size == 0:
        # Walks of length 1 produce no pairs; emit the initialization.
        ids = [corpus.node_ids[v] for v in vocab]
        return EmbeddingMatrix(ids, emb_in, "homogeneous", corpus.source,
                               meta={"epoch_losses": []})

    centers = row_of_local[centers]
    contexts = row_of_local[contexts]

    n_pairs = centers.size
    batches_per_epoch = (n_pairs + cfg.batch_size - 1) // cfg.batch_size
    total_batches = cfg.epochs * batches_per_epoch
    epoch_losses = []
    step = 0
    for _ in range(cfg.epochs):
        order = rng.permutation(n_pairs)
        epoch_loss = 0.0
        for b in range(batches_per_epoch):
            sel = order[b * cfg.batch_size : (b + 1) * cfg.batch_size]
            negs = noise.sample(rng, size=(sel.size, cfg.negatives))
            lr = linear_lr(step, total_batches, cfg.learning_rate, cfg.min_learning_rate)
            epoch_loss += batch_update(emb_in, emb_out, centers[sel], contexts[sel], negs, lr)
            step += 1
        epoch_losses.append(epoch_loss / n_pairs)

    ids = [corpus.node_ids[v] for v in vocab]
    return EmbeddingMatrix(ids, emb_in, "homogeneous", corpus.source,
                           meta={"epoch_losses": epoch_losses})


__all__ = [
    "train_skipgram",
    "corpus_pairs",
    "negative_sampling_table",
    "sgns_loss",
    "sgns_gradients",
]
