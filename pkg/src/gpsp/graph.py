"""Typed heterogeneous graph: data model, file ingestion, and degrees.

File formats
------------
node file   one record per line: ``<node_id>\\t<node_type>``
edge file   ``<src_id>\\t<dst_id>\\t<edge_type>[\\t<weight>]``; optional header
            lines ``#type <edge_type> directed|undirected`` declare per-type
            directedness (undirected is the default)
label file  ``<node_id>\\t<label_int>``

Lines starting with ``#`` are ignored (except ``#type`` headers in edge
files). Fields are whitespace-separated, so identifiers must not contain
whitespace. A missing weight column defaults to 1.0 and duplicate
``(src, dst, edge_type)`` rows have their weights summed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphFormatError, TypeConsistencyError


@dataclass(frozen=True)
class NodeRef:
    """A node: opaque string id, its type label, and its dense load index."""

    id: str
    type_label: str
    index: int


@dataclass(frozen=True)
class TypedEdge:
    """A weighted typed edge between two node indices."""

    src: int
    dst: int
    edge_type: str
    weight: float


class HeterogeneousGraph:
    """Immutable typed graph with a per-edge-type endpoint-type table.

    The graph is safe for concurrent read access once constructed; all
    mutation happens inside :func:`load_graph` / the constructor.
    """

    def __init__(self, nodes, edges, type_pairs, directed_types=None):
        self.nodes: list[NodeRef] = list(nodes)
        self.index_of: dict[str, int] = {n.id: n.index for n in self.nodes}
        if len(self.index_of) != len(self.nodes):
            raise ValueError("duplicate node ids")
        for i, n in enumerate(self.nodes):
            if n.index != i:
                raise ValueError(f"node index {n.index} is not dense at position {i}")
        self._type_pairs: dict[str, tuple[str, str]] = dict(type_pairs)
        self.directed_types: dict[str, bool] = {
            t: bool((directed_types or {}).get(t, False)) for t in self._type_pairs
        }
        self.edges: list[TypedEdge] = sorted(
            edges, key=lambda e: (e.edge_type, e.src, e.dst)
        )
        self._check_edges()

    def _check_edges(self):
        n = len(self.nodes)
        for e in self.edges:
            if not (0 <= e.src < n and 0 <= e.dst < n):
                raise ValueError(f"edge endpoint out of range: {e}")
            if not e.weight > 0:
                raise ValueError(f"edge weight must be positive: {e}")
            pair = self._type_pairs.get(e.edge_type)
            if pair is None:
                raise TypeConsistencyError(
                    f"edge type {e.edge_type!r} missing from the type table"
                )
            actual = (self.nodes[e.src].type_label, self.nodes[e.dst].type_label)
            if actual != pair:
                raise TypeConsistencyError(
                    f"edge type {e.edge_type!r} declared over {pair} but found {actual}"
                )

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def node_by_id(self, node_id: str) -> NodeRef:
        return self.nodes[self.index_of[node_id]]

    def type_of(self, index: int) -> str:
        return self.nodes[index].type_label

    def type_table(self) -> dict[str, tuple[str, str]]:
        """Edge type -> (src node type, dst node type), sorted by edge type."""
        return {t: self._type_pairs[t] for t in sorted(self._type_pairs)}

    def is_directed(self, edge_type: str) -> bool:
        if edge_type not in self.directed_types:
            raise KeyError(f"unknown edge type {edge_type!r}")
        return self.directed_types[edge_type]

    def degree(self, node: int, edge_type: str | None = None) -> float:
        """Weighted degree of a node, optionally restricted to one edge type.

        Every edge contributes its weight once per endpoint slot, so a
        self-loop counts twice (adjacency-matrix row sum with a doubled
        diagonal).
        """
        if not 0 <= node < len(self.nodes):
            raise IndexError(f"node index {node} out of range")
        if edge_type is not None and edge_type not in self._type_pairs:
            raise KeyError(f"unknown edge type {edge_type!r}")
        total = 0.0
        for e in self.edges:
            if edge_type is not None and e.edge_type != edge_type:
                continue
            if e.src == node:
                total += e.weight
            if e.dst == node:
                total += e.weight
        return total

    def total_edge_weight(self) -> float:
        return float(sum(e.weight for e in self.edges))

    def __repr__(self):
        return (
            f"HeterogeneousGraph(nodes={len(self.nodes)}, edges={len(self.edges)}, "
            f"edge_types={sorted(self._type_pairs)})"
        )


def _data_lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            yield lineno, line


def load_nodes(node_file) -> list[NodeRef]:
    nodes = []
    seen = {}
    for lineno, line in _data_lines(node_file):
        if line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(
                node_file, lineno, f"expected '<node_id> <node_type>', got {line!r}"
            )
        node_id, type_label = parts
        if node_id in seen:
            raise GraphFormatError(
                node_file, lineno, f"duplicate node id {node_id!r} (first at line {seen[node_id]})"
            )
        seen[node_id] = lineno
        nodes.append(NodeRef(node_id, type_label, len(nodes)))
    return nodes


def load_graph(node_file, edge_file) -> HeterogeneousGraph:
    """Load a typed graph from a node file and an edge file.

    The endpoint-type pair of each edge type is fixed by its first
    occurrence (or normalized orientation for later rows whose two distinct
    endpoint types appear swapped). A genuinely conflicting endpoint-type
    pair raises :class:`TypeConsistencyError`; an edge endpoint missing
    from the node file raises :class:`GraphFormatError`.
    """
    nodes = load_nodes(node_file)
    index_of = {n.id: n.index for n in nodes}

    type_pairs: dict[str, tuple[str, str]] = {}
    directed: dict[str, bool] = {}
    weights: dict[tuple[str, int, int], float] = {}

    for lineno, line in _data_lines(edge_file):
        if line.startswith("#"):
            parts = line.split()
            if parts[0] == "#type":
                if len(parts) != 3 or parts[2] not in ("directed", "undirected"):
                    raise GraphFormatError(
                        edge_file, lineno, "expected '#type <edge_type> directed|undirected'"
                    )
                directed[parts[1]] = parts[2] == "directed"
            continue
        parts = line.split()
        if len(parts) not in (3, 4):
            raise GraphFormatError(
                edge_file,
                lineno,
                f"expected '<src> <dst> <edge_type> [<weight>]', got {line!r}",
            )
        src_id, dst_id, edge_type = parts[:3]
        try:
            weight = float(parts[3]) if len(parts) == 4 else 1.0
        except ValueError:
            raise GraphFormatError(edge_file, lineno, f"bad weight {parts[3]!r}") from None
        if not weight > 0:
            raise GraphFormatError(edge_file, lineno, f"weight must be > 0, got {weight}")
        try:
            src, dst = index_of[src_id], index_of[dst_id]
        except KeyError as missing:
            raise GraphFormatError(
                edge_file, lineno, f"unknown node id {missing.args[0]!r}"
            ) from None

        pair = (nodes[src].type_label, nodes[dst].type_label)
        known = type_pairs.get(edge_type)
        if known is None:
            type_pairs[edge_type] = pair
        elif pair != known:
            if pair == (known[1], known[0]) and known[0] != known[1]:
                src, dst = dst, src  # orientation normalized to the recorded pair
            else:
                raise TypeConsistencyError(
                    f"{edge_file}:{lineno}: edge type {edge_type!r} declared over "
                    f"{known} but found {pair}"
                )

        if not directed.get(edge_type, False) and pair[0] == pair[1] and src > dst:
            src, dst = dst, src  # canonical endpoint order for undirected same-type edges
        key = (edge_type, src, dst)
        weights[key] = weights.get(key, 0.0) + weight

    edges = [TypedEdge(s, d, t, w) for (t, s, d), w in weights.items()]
    directed = {t: directed.get(t, False) for t in type_pairs}
    return HeterogeneousGraph(nodes, edges, type_pairs, directed)


def write_graph(graph: HeterogeneousGraph, node_file, edge_file) -> None:
    """Write a graph back to the node/edge file formats (round-trip safe)."""
    with open(node_file, "w", encoding="utf-8") as fh:
        for n in graph.nodes:
            fh.write(f"{n.id}\t{n.type_label}\n")
    with open(edge_file, "w", encoding="utf-8") as fh:
        for t in sorted(graph.directed_types):
            mode = "directed" if graph.directed_types[t] else "undirected"
            fh.write(f"#type {t} {mode}\n")
        for e in graph.edges:  # already sorted by (edge_type, src, dst)
            src_id = graph.nodes[e.src].id
            dst_id = graph.nodes[e.dst].id
            fh.write(f"{src_id}\t{dst_id}\t{e.edge_type}\t{e.weight!r}\n")


def load_labels(label_file) -> dict[str, int]:
    """Read ``<node_id>\\t<label_int>`` pairs.

    A node id appearing twice with different labels is rejected: the
    evaluation protocol is single-label multi-class.
    """
    labels: dict[str, int] = {}
    for lineno, line in _data_lines(label_file):
        if line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(
                label_file, lineno, f"expected '<node_id> <label_int>', got {line!r}"
            )
        node_id, raw = parts
        try:
            label = int(raw)
        except ValueError:
            raise GraphFormatError(label_file, lineno, f"bad label {raw!r}") from None
        if label < 0:
            raise GraphFormatError(label_file, lineno, f"label must be >= 0, got {label}")
        if node_id in labels and labels[node_id] != label:
            raise GraphFormatError(
                label_file,
                lineno,
                f"node {node_id!r} has multiple labels; multi-label input is not supported",
            )
        labels[node_id] = label
    return labels


def write_labels(labels: dict[str, int], label_file) -> None:
    with open(label_file, "w", encoding="utf-8") as fh:
        for node_id, label in labels.items():
            fh.write(f"{node_id}\t{label}\n")


__all__ = [
    "NodeRef",
    "TypedEdge",
    "HeterogeneousGraph",
    "load_graph",
    "load_nodes",
    "write_graph",
    "load_labels",
    "write_labels",
]
