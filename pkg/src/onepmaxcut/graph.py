"""Weighted undirected simple graphs and the structural operations used by
the branching solver: contraction, edge deletion, SPLIT and cut evaluation.

Node ids are plain integers. Edges are keyed by the sorted pair ``(u, v)``
with ``u < v``. Graph values are never mutated after construction; every
operation returns a new graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import NamedTuple, Optional

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

Edge = tuple[int, int]
CutSide = frozenset[int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid operation arguments."""


class WeightOverflowError(OverflowError):
    """A weight or a sum of weights left the signed 64-bit range."""


def check_int64(value: int, what: str = "weight sum") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise WeightOverflowError(f"{what} {value} exceeds the signed 64-bit range")
    return value


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Undirected simple graph with signed integer edge weights.

    Parameters
    ----------
    nodes : iterable of int
        Node ids. Endpoints of ``edges`` are added automatically.
    edges : mapping or iterable
        Either a mapping ``{(u, v): w}`` or an iterable of ``(u, v, w)``
        triples. Parallel edges are merged by adding their weights;
        self-loops are rejected.
    """

    __slots__ = ("_nodes", "_edges", "_adj")

    def __init__(self, nodes: Iterable[int] = (), edges=()):
        node_set = set(nodes)
        merged: dict[Edge, int] = {}
        items = edges.items() if isinstance(edges, Mapping) else edges
        for item in items:
            if isinstance(edges, Mapping):
                (u, v), w = item
            else:
                u, v, w = item
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if not isinstance(w, int) or isinstance(w, bool):
                raise GraphError(f"edge ({u}, {v}) has non-integer weight {w!r}")
            key = edge_key(u, v)
            merged[key] = check_int64(merged.get(key, 0) + check_int64(w, "weight"))
            node_set.add(u)
            node_set.add(v)
        self._nodes = frozenset(node_set)
        self._edges = merged
        self._adj: Optional[dict[int, dict[int, int]]] = None

    @property
    def nodes(self) -> frozenset[int]:
        return self._nodes

    @property
    def edges(self) -> Mapping[Edge, int]:
        return MappingProxyType(self._edges)

    @property
    def adj(self) -> Mapping[int, Mapping[int, int]]:
        """Neighbour map ``node -> {neighbour: weight}`` (built lazily)."""
        if self._adj is None:
            adj: dict[int, dict[int, int]] = {v: {} for v in self._nodes}
            for (u, v), w in self._edges.items():
                adj[u][v] = w
                adj[v][u] = w
            self._adj = adj
        return self._adj

    def number_of_nodes(self) -> int:
        return len(self._nodes)

    def number_of_edges(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edges

    def weight(self, u: int, v: int) -> int:
        return self._edges[edge_key(u, v)]

    def total_weight(self) -> int:
        return check_int64(sum(self._edges.values()))

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    def __hash__(self):
        return hash((self._nodes, frozenset(self._edges.items())))

    def __repr__(self):
        return f"WeightedGraph(n={len(self._nodes)}, m={len(self._edges)})"

    # pickling support for process pools (__slots__ without __dict__)
    def __getstate__(self):
        return (self._nodes, self._edges)

    def __setstate__(self, state):
        self._nodes, self._edges = state
        self._adj = None


def cut_value(g: WeightedGraph, side: Iterable[int]) -> int:
    """Total weight of the edges with exactly one endpoint in ``side``."""
    s = side if isinstance(side, (set, frozenset)) else set(side)
    unknown = s - g.nodes
    if unknown:
        raise GraphError(f"cut side references unknown nodes {sorted(unknown)}")
    total = 0
    for (u, v), w in g.edges.items():
        if (u in s) != (v in s):
            total += w
    return check_int64(total)


@dataclass(frozen=True)
class ContractionRecord:
    """Everything needed to undo one contraction.

    ``weight_merges`` lists ``(neighbour, weight_from_x, weight_from_y)`` for
    every neighbour of the merged node; a missing edge is ``None``.
    ``dropped_weight`` is the weight of the edge ``xy`` (``None`` if absent).
    """

    merged_node: int
    originals: tuple[int, int]
    weight_merges: tuple[tuple[int, Optional[int], Optional[int]], ...]
    dropped_weight: Optional[int] = None


def contract(
    g: WeightedGraph, x: int, y: int, merged: Optional[int] = None
) -> tuple[WeightedGraph, ContractionRecord]:
    """Return ``G/xy`` and the record needed to split the merged node again.

    The merged node id defaults to ``max(g.nodes) + 1``. Along any chain of
    contractions this behaves like a monotone counter: the largest id ever
    issued is always still present, so fresh ids never collide and do not
    depend on the order in which sibling branches are evaluated.
    """
    if x == y:
        raise GraphError(f"cannot contract node {x} with itself")
    for node in (x, y):
        if node not in g.nodes:
            raise GraphError(f"node {node} not in graph")
    if merged is None:
        merged = max(g.nodes) + 1
    elif merged in g.nodes:
        raise GraphError(f"merged node id {merged} is not fresh")

    adj = g.adj
    nx_, ny_ = adj[x], adj[y]
    edges: dict[Edge, int] = {}
    for (u, v), w in g.edges.items():
        if u not in (x, y) and v not in (x, y):
            edges[(u, v)] = w
    merges = []
    for nb in sorted((set(nx_) | set(ny_)) - {x, y}):
        wx, wy = nx_.get(nb), ny_.get(nb)
        total = check_int64((wx or 0) + (wy or 0))
        edges[edge_key(nb, merged)] = total
        merges.append((nb, wx, wy))
    nodes = (g.nodes - {x, y}) | {merged}
    rec = ContractionRecord(merged, (x, y), tuple(merges), nx_.get(y))
    return WeightedGraph(nodes, edges), rec


def delete_edge(g: WeightedGraph, u: int, v: int) -> WeightedGraph:
    key = edge_key(u, v)
    if key not in g.edges:
        raise GraphError(f"edge {key} not in graph")
    edges = dict(g.edges)
    del edges[key]
    return WeightedGraph(g.nodes, edges)


def split(side: Iterable[int], rec: ContractionRecord) -> CutSide:
    """Inverse of contraction on a node set: replace the merged node by both
    originals if it is on this side, otherwise return the side unchanged."""
    s = frozenset(side)
    if rec.merged_node in s:
        return (s - {rec.merged_node}) | set(rec.originals)
    return s


def uncontract(g: WeightedGraph, rec: ContractionRecord) -> WeightedGraph:
    """Rebuild the pre-contraction graph from ``G/xy`` and its record."""
    x, y = rec.originals
    m = rec.merged_node
    edges = {k: w for k, w in g.edges.items() if m not in k}
    for nb, wx, wy in rec.weight_merges:
        if wx is not None:
            edges[edge_key(nb, x)] = wx
        if wy is not None:
            edges[edge_key(nb, y)] = wy
    if rec.dropped_weight is not None:
        edges[edge_key(x, y)] = rec.dropped_weight
    return WeightedGraph((g.nodes - {m}) | {x, y}, edges)


class BlockDecomposition(NamedTuple):
    blocks: list[frozenset[Edge]]
    articulation_points: frozenset[int]


def blocks(g: WeightedGraph) -> BlockDecomposition:
    """Biconnected blocks (as edge sets) and articulation nodes.

    Iterative lowpoint DFS. Bridges come out as single-edge blocks and
    isolated nodes belong to no block. Output order is deterministic:
    roots and neighbours are visited in increasing id order.
    """
    adj = {v: sorted(nbrs) for v, nbrs in g.adj.items()}
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: list[frozenset[Edge]] = []
    cut_nodes: set[int] = set()
    counter = 0

    for root in sorted(g.nodes):
        if root in disc or not adj[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    edge_stack.append(edge_key(v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(edge_key(v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cut_nodes.add(parent)
                tree_edge = edge_key(parent, v)
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == tree_edge:
                        break
                found.append(frozenset(block))
        if root_children > 1:
            cut_nodes.add(root)
    return BlockDecomposition(found, frozenset(cut_nodes))
