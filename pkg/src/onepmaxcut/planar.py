"""Exact Max-Cut on planar graphs through the dual graph.

For a connected, bridgeless planar block the cuts of the primal are exactly
the even-degree edge sets of the dual. With ``P`` the strictly positive
edges, any cut ``C`` has value ``c(P) - |c|(C xor P)``, and ``C xor P`` is a
T-join for ``T`` = the dual nodes of odd ``P``-degree. A minimum T-join
therefore yields a maximum cut. Blocks are solved independently and glued
at articulation nodes; bridges are cut exactly when their weight is
positive.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

from .graph import Edge, WeightedGraph, blocks, check_int64, cut_value, edge_key
from .matching import MatchingProblem, min_weight_perfect_matching, shortest_paths_from
from .solution import CutSolution, SearchStats

Dart = tuple[int, int]


class NonPlanarError(ValueError):
    """The graph has no planar embedding."""


class NotACutError(RuntimeError):
    """An edge set handed to :func:`cut_edges_to_partition` is not a cut."""


@dataclass(frozen=True)
class CombinatorialEmbedding:
    """Rotation system plus the faces it induces.

    ``rotation[v]`` lists the neighbours of ``v`` in clockwise order. Faces
    are cyclic dart sequences; the dart following ``(u, v)`` is
    ``(v, w)`` with ``w`` the clockwise successor of ``u`` around ``v``.
    Faces are traced per connected component, so each component with at
    least one edge contributes its own outer face.
    """

    rotation: dict[int, tuple[int, ...]]
    faces: tuple[tuple[Dart, ...], ...]

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        rot = self.rotation[v]
        return (v, rot[(rot.index(u) + 1) % len(rot)])

    def face_of_dart(self) -> dict[Dart, int]:
        return {d: i for i, face in enumerate(self.faces) for d in face}

    def components(self) -> list[set[int]]:
        seen: set[int] = set()
        comps = []
        for s in sorted(self.rotation):
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.rotation[u]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def euler_holds(self) -> bool:
        """``n - m + f = 2`` on every component that has an edge."""
        face_at = self.face_of_dart()
        for comp in self.components():
            m2 = sum(len(self.rotation[v]) for v in comp)
            if m2 == 0:
                continue
            faces = {face_at[(v, w)] for v in comp for w in self.rotation[v]}
            if len(comp) - m2 // 2 + len(faces) != 2:
                return False
        return True


def trace_faces(rotation: dict[int, tuple[int, ...]]) -> tuple[tuple[Dart, ...], ...]:
    position = {v: {w: i for i, w in enumerate(rot)} for v, rot in rotation.items()}
    seen: set[Dart] = set()
    faces = []
    for u in sorted(rotation):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            face = []
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                a, b = dart
                rot = rotation[b]
                dart = (b, rot[(position[b][a] + 1) % len(rot)])
            faces.append(tuple(face))
    return tuple(faces)


def planar_embedding(g: WeightedGraph) -> CombinatorialEmbedding:
    """Combinatorial embedding of ``g`` or :class:`NonPlanarError`."""
    h = nx.Graph()
    h.add_nodes_from(sorted(g.nodes))
    h.add_edges_from(sorted(g.edges))
    is_planar, emb = nx.check_planarity(h)
    if not is_planar:
        raise NonPlanarError(f"graph with {len(g.nodes)} nodes and {len(g.edges)} edges is not planar")
    rotation = {v: tuple(emb.neighbors_cw_order(v)) if h.degree(v) else () for v in sorted(g.nodes)}
    return CombinatorialEmbedding(rotation, trace_faces(rotation))


@dataclass(frozen=True)
class DualGraph:
    """Face-adjacency multigraph. Dual edge ``i`` crosses primal edge
    ``primal[i]`` and joins faces ``ends[i]``; parallel dual edges are kept
    distinct."""

    num_faces: int
    ends: tuple[tuple[int, int], ...]
    primal: tuple[Edge, ...]
    weights: tuple[int, ...]

    def abs_weighted_edges(self) -> list[tuple[int, int, int]]:
        return [(f, h, abs(w)) for (f, h), w in zip(self.ends, self.weights)]


def dual(emb: CombinatorialEmbedding, g: WeightedGraph) -> DualGraph:
    face_at = emb.face_of_dart()
    ends, primal, weights = [], [], []
    for (u, v), w in sorted(g.edges.items()):
        f, h = face_at[(u, v)], face_at[(v, u)]
        if f == h:
            raise ValueError(f"edge {(u, v)} is a bridge; the dual would get a self-loop")
        ends.append((f, h))
        primal.append((u, v))
        weights.append(w)
    return DualGraph(len(emb.faces), tuple(ends), tuple(primal), tuple(weights))


def odd_set(d: DualGraph, positive_edges: Iterable[int]) -> frozenset[int]:
    """Dual nodes incident to an odd number of the given dual edges."""
    odd: set[int] = set()
    for i in positive_edges:
        for f in d.ends[i]:
            odd ^= {f}
    return frozenset(odd)


def t_join(d: DualGraph, terminals: Iterable[int]) -> frozenset[int]:
    """Minimum-weight T-join under weights ``|c|``, as dual edge indices.

    Shortest paths between terminals, a minimum-weight perfect matching on
    the terminal distance graph, then the symmetric difference of the
    matched paths.
    """
    terms = sorted(terminals)
    if len(terms) % 2:
        raise ValueError(f"T-join needs an even terminal set, got {len(terms)}")
    if not terms:
        return frozenset()
    host = d.abs_weighted_edges()
    tables = {t: shortest_paths_from(host, t) for t in terms}
    metric = []
    for s, t in itertools.combinations(terms, 2):
        if t not in tables[s].dist:
            raise ValueError(f"terminals {s} and {t} are disconnected")
        metric.append((s, t, tables[s].dist[t]))
    pairs = min_weight_perfect_matching(MatchingProblem(tuple(terms), tuple(metric)))
    join: set[int] = set()
    for s, t in pairs:
        join.symmetric_difference_update(tables[s].path_edges(t))
    return frozenset(join)


def cut_edges_to_partition(g: WeightedGraph, cut: Iterable[Edge]) -> frozenset[int]:
    """Node side realising the edge set ``cut``.

    Breadth-first labelling that flips side across cut edges. In every
    connected component the smallest node id lands on the complement side,
    so an empty cut gives the empty side.
    """
    cut_set = {edge_key(*e) for e in cut}
    label: dict[int, bool] = {}
    adj = g.adj
    for root in sorted(g.nodes):
        if root in label:
            continue
        label[root] = False
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u]):
                want = label[u] != (edge_key(u, w) in cut_set)
                if w not in label:
                    label[w] = want
                    queue.append(w)
                elif label[w] != want:
                    raise NotACutError(f"parity conflict at edge {edge_key(u, w)}")
    return frozenset(v for v, side in label.items() if side)


def _block_cut(sub: WeightedGraph) -> tuple[set[Edge], int]:
    d = dual(planar_embedding(sub), sub)
    positive = [i for i, w in enumerate(d.weights) if w > 0]
    join = t_join(d, odd_set(d, positive))
    chosen = set(positive).symmetric_difference(join)
    value = sum(d.weights[i] for i in positive) - sum(abs(d.weights[i]) for i in join)
    return {d.primal[i] for i in chosen}, value


def planar_max_cut(g: WeightedGraph) -> CutSolution:
    """Maximum cut of a planar graph.

    Raises :class:`NonPlanarError` if some block is not planar.
    """
    cut: set[Edge] = set()
    value = 0
    for block in blocks(g).blocks:
        if len(block) == 1:
            (e,) = block
            if g.edges[e] > 0:
                cut.add(e)
                value += g.edges[e]
            continue
        sub = WeightedGraph((), {e: g.edges[e] for e in block})
        block_cut, block_value = _block_cut(sub)
        cut |= block_cut
        value += block_value
    side = cut_edges_to_partition(g, cut)
    check_int64(value)
    if value != cut_value(g, side):
        raise RuntimeError("planar max-cut value does not match its partition")
    return CutSolution(side, value, SearchStats(leaves=1))
