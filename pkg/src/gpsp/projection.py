"""Projective embeddings across a bipartite subnetwork.

A source node with bipartite neighbors B_1..B_N in the target type gets the
vector (1/N) * sum_j target_vec(B_j) * w_j in the target type's latent
space: a neighbor average scaled by edge weight, dividing by the neighbor
count N (not the weight sum) even when weights are non-uniform. Summation
runs in ascending target local index so results are reproducible bit for
bit regardless of input edge order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingMatrix
from .errors import MissingVectorError
from .partition import Subnetwork

MISSING_POLICIES = ("fail", "skip")


@dataclass
class ProjectionSpec:
    """One direction of projection across a bipartite subnetwork.

    ``target_embeddings`` must be the homogeneous embedding of the target
    type (its ``space_label`` is checked against ``<target>-<target>``).
    ``missing_policy`` controls neighbors without a target vector: ``fail``
    raises, ``skip`` drops the term and decrements N. Setting
    ``normalize_by_weight_sum`` divides by the weight sum instead of N
    (identical on unit-weight graphs).
    """

    bipartite: Subnetwork
    source_type: str
    target_type: str
    target_embeddings: EmbeddingMatrix
    missing_policy: str = "fail"
    normalize_by_weight_sum: bool = False

    def __post_init__(self):
        if self.bipartite.is_homogeneous:
            raise ValueError(f"subnetwork {self.bipartite.label!r} is not bipartite")
        want = tuple(sorted((self.source_type, self.target_type)))
        if want != self.bipartite.type_pair or self.source_type == self.target_type:
            raise ValueError(
                f"direction {self.source_type}->{self.target_type} does not match "
                f"bipartite pair {self.bipartite.type_pair}"
            )
        if self.missing_policy not in MISSING_POLICIES:
            raise ValueError(f"missing_policy must be one of {MISSING_POLICIES}")
        expected_space = f"{self.target_type}-{self.target_type}"
        if self.target_embeddings.space_label != expected_space:
            raise ValueError(
                f"target embeddings live in {self.target_embeddings.space_label!r}, "
                f"expected {expected_space!r}"
            )


def project(spec: ProjectionSpec) -> EmbeddingMatrix:
    """Compute the projective embedding for every source node with N >= 1.

    Source nodes with no (surviving) bipartite neighbors emit no vector;
    the composition stage decides how to treat them.
    """
    sub = spec.bipartite
    src_side = 0 if sub.type_pair[0] == spec.source_type else 1
    src = sub.edges[:, src_side]
    tgt = sub.edges[:, 1 - src_side]
    w = sub.weights

    target = spec.target_embeddings
    tgt_rows = np.array([target.row_of.get(sub.node_ids[t], -1) for t in tgt], dtype=np.int64)
    missing = tgt_rows < 0
    if missing.any():
        if spec.missing_policy == "fail":
            names = sorted({sub.node_ids[t] for t in tgt[missing]})
            raise MissingVectorError(
                f"{len(names)} target node(s) have no vector in "
                f"{target.space_label!r}: {names[:5]}{'...' if len(names) > 5 else ''}"
            )
        src, tgt, w, tgt_rows = (a[~missing] for a in (src, tgt, w, tgt_rows))

    n_local = sub.node_count
    counts = np.bincount(src, minlength=n_local).astype(np.float64)
    weight_sums = np.bincount(src, weights=w, minlength=n_local)

    # Fixed summation order: ascending (source, target) local index.
    order = np.lexsort((tgt, src))
    src, w, tgt_rows = src[order], w[order], tgt_rows[order]

    acc = np.zeros((n_local, target.dim), dtype=np.float64)
    np.add.at(acc, src, w[:, None] * target.matrix[tgt_rows])

    emitted = np.flatnonzero(counts > 0)
    denom = weight_sums[emitted] if spec.normalize_by_weight_sum else counts[emitted]
    vectors = acc[emitted] / denom[:, None]
    ids = [sub.node_ids[i] for i in emitted]
    return EmbeddingMatrix(
        ids,
        vectors,
        "projective",
        target.space_label,
        meta={"direction": (spec.source_type, spec.target_type)},
    )


__all__ = ["ProjectionSpec", "project", "MISSING_POLICIES"]
