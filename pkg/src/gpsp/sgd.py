"""Shared mini-batch SGD machinery for the negative-sampling trainers.

Both the walk-based and the edge-sampling trainers optimize the same pair
objective: for an input vector u, an output vector v, and K sampled noise
vectors n_k,

    loss(u, v, {n_k}) = -log sigmoid(u.v) - sum_k log sigmoid(-u.n_k)

Batches are processed with gradients evaluated at the pre-batch parameters
and applied with a deterministic scatter-add, so a fixed seed reproduces
training bit for bit in single-threaded mode.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from scipy.special import expit


def log_sigmoid(x):
    return -np.logaddexp(0.0, -np.asarray(x, dtype=np.float64))


def scatter_add(mat: np.ndarray, rows: np.ndarray, vals: np.ndarray) -> None:
    """``mat[rows] += vals`` with duplicate rows accumulated.

    Duplicates are merged through a compact sparse product, which is both
    deterministic and much faster than ``np.add.at`` for the batch sizes
    used here.
    """
    if rows.size == 0:
        return
    uniq, inv = np.unique(rows, return_inverse=True)
    if uniq.size == rows.size:
        mat[rows] += vals
        return
    ones = np.ones(rows.size, dtype=np.float64)
    merge = sp.csr_matrix((ones, (inv, np.arange(rows.size))), shape=(uniq.size, rows.size))
    mat[uniq] += merge @ vals


def pair_loss(u, v, negatives) -> float:
    """Loss of one (input, output, K noise vectors) sample."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    negatives = np.atleast_2d(np.asarray(negatives, dtype=np.float64))
    pos = float(u @ v)
    neg = negatives @ u
    return float(-log_sigmoid(pos) - log_sigmoid(-neg).sum())


def pair_gradients(u, v, negatives):
    """Analytic gradients of :func:`pair_loss` w.r.t. u, v, and each n_k."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    negatives = np.atleast_2d(np.asarray(negatives, dtype=np.float64))
    g_pos = expit(u @ v) - 1.0
    g_neg = expit(negatives @ u)  # (K,)
    grad_u = g_pos * v + g_neg @ negatives
    grad_v = g_pos * u
    grad_negs = g_neg[:, None] * u[None, :]
    return grad_u, grad_v, grad_negs


def batch_update(emb_in, emb_out, centers, contexts, negatives, lr) -> float:
    """One mini-batch step over index arrays; returns the summed batch loss.

    ``negatives`` is (B, K); draws that collide with their own positive pair
    are dropped rather than resampled. ``emb_in`` and ``emb_out`` may be the
    same array (first-order training).
    """
    u = emb_in[centers]
    v = emb_out[contexts]
    nvec = emb_out[negatives]  # (B, K, d)

    pos = np.einsum("bd,bd->b", u, v)
    neg = np.einsum("bd,bkd->bk", u, nvec)
    keep = (negatives != centers[:, None]) & (negatives != contexts[:, None])

    loss = -log_sigmoid(pos).sum() - (log_sigmoid(-neg) * keep).sum()

    g_pos = expit(pos) - 1.0
    g_neg = expit(neg) * keep
    grad_u = g_pos[:, None] * v + np.einsum("bk,bkd->bd", g_neg, nvec)
    grad_v = g_pos[:, None] * u
    grad_n = g_neg[:, :, None] * u[:, None, :]

    d = emb_in.shape[1]
    scatter_add(emb_in, centers, -lr * grad_u)
    scatter_add(emb_out, contexts, -lr * grad_v)
    scatter_add(emb_out, negatives.reshape(-1), -lr * grad_n.reshape(-1, d))
    return float(loss)


def linear_lr(step: int, total_steps: int, lr0: float, lr_min: float) -> float:
    """Learning rate decayed linearly from lr0 to lr_min over all steps."""
    if total_steps <= 1:
        return lr0
    frac = step / (total_steps - 1)
    return lr0 + (lr_min - lr0) * frac


def init_matrices(n: int, dim: int, rng: np.random.Generator, zero_output: bool = True):
    """Input vectors uniform in [-0.5/dim, 0.5/dim); output vectors zero.

    With ``zero_output=False`` the output side shares the input-style random
    initialization (needed by first-order training, where an all-zero start
    has zero gradient).
    """
    emb_in = (rng.random((n, dim)) - 0.5) / dim
    if zero_output:
        return emb_in, np.zeros((n, dim), dtype=np.float64)
    return emb_in, (rng.random((n, dim)) - 0.5) / dim


__all__ = [
    "log_sigmoid",
    "scatter_add",
    "pair_loss",
    "pair_gradients",
    "batch_update",
    "linear_lr",
    "init_matrices",
]
