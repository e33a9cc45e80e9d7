"""Split a typed graph into homogeneous and bipartite subnetworks by edge type.

Edge types are grouped by their unordered endpoint-type pair, which yields
the minimum number of subnetworks in which every cell is either homogeneous
(one node type) or bipartite (two node types). Edge types sharing a pair are
merged, with weights summed per node pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SubnetworkNotFoundError
from .graph import HeterogeneousGraph


@dataclass
class Subnetwork:
    """One partition cell with its own compact node indexing.

    ``type_pair`` is sorted; both entries equal means homogeneous. For a
    bipartite cell, edge column 0 always holds the ``type_pair[0]`` side.
    """

    type_pair: tuple[str, str]
    edge_types: tuple[str, ...]
    node_ids: list[str]
    node_types: list[str]
    global_indices: np.ndarray  # local -> index in the parent graph
    edges: np.ndarray  # (m, 2) local endpoint indices
    weights: np.ndarray  # (m,) positive weights
    directed: np.ndarray  # (m,) bool, True = edge goes col0 -> col1 only
    _adjacency: tuple | None = field(default=None, repr=False, compare=False)

    @property
    def kind(self) -> str:
        return "homogeneous" if self.type_pair[0] == self.type_pair[1] else "bipartite"

    @property
    def is_homogeneous(self) -> bool:
        return self.type_pair[0] == self.type_pair[1]

    @property
    def label(self) -> str:
        return f"{self.type_pair[0]}-{self.type_pair[1]}"

    @property
    def node_count(self) -> int:
        return len(self.node_ids)

    def total_weight(self) -> float:
        return float(self.weights.sum())

    def adjacency(self):
        """Per-local-node out-neighbors as (neighbors, weights) array lists.

        Undirected edges appear in both endpoint lists; a self-loop appears
        once in its node's list. Built lazily and cached (the subnetwork is
        treated as immutable after partitioning).
        """
        if self._adjacency is None:
            n = self.node_count
            src = self.edges[:, 0]
            dst = self.edges[:, 1]
            undirected = ~self.directed
            off_loop = src != dst
            back = undirected & off_loop
            all_src = np.concatenate([src, dst[back]])
            all_dst = np.concatenate([dst, src[back]])
            all_w = np.concatenate([self.weights, self.weights[back]])
            order = np.lexsort((all_dst, all_src))
            all_src, all_dst, all_w = all_src[order], all_dst[order], all_w[order]
            counts = np.bincount(all_src, minlength=n)
            offsets = np.concatenate([[0], np.cumsum(counts)])
            neighbors = [all_dst[offsets[i] : offsets[i + 1]] for i in range(n)]
            weights = [all_w[offsets[i] : offsets[i + 1]] for i in range(n)]
            self._adjacency = (neighbors, weights)
        return self._adjacency


def partition(graph: HeterogeneousGraph) -> list[Subnetwork]:
    """Partition a graph into one subnetwork per unordered endpoint-type pair.

    Returns homogeneous subnetworks first (sorted by node type), then
    bipartite ones (sorted by type pair). Raises ``ValueError`` on a graph
    with an empty type table.
    """
    table = graph.type_table()
    if not table:
        raise ValueError("cannot partition a graph with an empty type table")

    groups: dict[tuple[str, str], list[str]] = {}
    for edge_type, (ta, tb) in table.items():
        key = (ta, tb) if ta <= tb else (tb, ta)
        groups.setdefault(key, []).append(edge_type)

    ordered = sorted(groups, key=lambda p: (p[0] != p[1], p))
    return [_build_subnetwork(graph, pair, sorted(groups[pair])) for pair in ordered]


def _build_subnetwork(graph, type_pair, edge_types) -> Subnetwork:
    etypes = set(edge_types)
    # Merge edges across the cell's edge types, keyed by canonical endpoints.
    merged: dict[tuple[int, int, bool], float] = {}
    for e in graph.edges:
        if e.edge_type not in etypes:
            continue
        is_directed = graph.directed_types[e.edge_type]
        u, v = e.src, e.dst
        if type_pair[0] != type_pair[1]:
            if graph.type_of(u) != type_pair[0]:
                u, v = v, u  # column 0 holds the type_pair[0] side
        elif not is_directed and u > v:
            u, v = v, u
        key = (u, v, is_directed)
        merged[key] = merged.get(key, 0.0) + e.weight

    participating = sorted({g for (u, v, _) in merged for g in (u, v)})
    local_of = {g: i for i, g in enumerate(participating)}

    keys = sorted(merged)
    edges = np.array([(local_of[u], local_of[v]) for u, v, _ in keys], dtype=np.int64)
    edges = edges.reshape(-1, 2)
    weights = np.array([merged[k] for k in keys], dtype=np.float64)
    directed = np.array([d for _, _, d in keys], dtype=bool)

    return Subnetwork(
        type_pair=type_pair,
        edge_types=tuple(edge_types),
        node_ids=[graph.nodes[g].id for g in participating],
        node_types=[graph.nodes[g].type_label for g in participating],
        global_indices=np.array(participating, dtype=np.int64),
        edges=edges,
        weights=weights,
        directed=directed,
    )


def subnetwork_of(subnetworks, type_a: str, type_b: str | None = None) -> Subnetwork:
    """Find the unique subnetwork for a (possibly unordered) type query.

    ``subnetwork_of(parts, "author")`` fetches the homogeneous author cell;
    ``subnetwork_of(parts, "paper", "author")`` the author-paper bipartite
    cell regardless of argument order.
    """
    if type_b is None:
        type_b = type_a
    want = (type_a, type_b) if type_a <= type_b else (type_b, type_a)
    for sub in subnetworks:
        if sub.type_pair == want:
            return sub
    raise SubnetworkNotFoundError(f"no subnetwork for type pair {want}")


def write_subnetwork(sub: Subnetwork, path) -> None:
    """Debug dump of one subnetwork in the edge-file format.

    Merged edges no longer carry their original edge types, so the
    subnetwork label is used as the type column.
    """
    mode = "directed" if bool(sub.directed.all()) and sub.directed.size else "undirected"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#type {sub.label} {mode}\n")
        for (u, v), w in zip(sub.edges, sub.weights):
            fh.write(f"{sub.node_ids[u]}\t{sub.node_ids[v]}\t{sub.label}\t{w!r}\n")


__all__ = ["Subnetwork", "partition", "subnetwork_of", "write_subnetwork"]
