"""Exact minimum-weight perfect matching (Edmonds' blossom algorithm) and the
single-source shortest path helper used by the T-join reduction.

The blossom core is the classic O(n^3) primal-dual method for maximum
weight matching in general graphs, with an optional maximum-cardinality
constraint. Minimum-weight perfect matching is obtained by flipping the
weights. All arithmetic is on Python integers; edge weights are doubled
internally so every dual variable stays integral.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional


class NoPerfectMatchingError(ValueError):
    """The graph has no perfect matching."""


@dataclass(frozen=True)
class MatchingProblem:
    """Undirected graph for matching: node ids and ``(u, v, weight)`` edges."""

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int, int]], nodes: Iterable[int] = ()):
        edges = tuple(edges)
        node_set = set(nodes)
        for u, v, _ in edges:
            node_set.update((u, v))
        return cls(tuple(sorted(node_set)), edges)


class _MaxWeightMatcher:
    # Vertices are 0..n-1; blossoms n..2n-1. An edge k has endpoints 2k and
    # 2k+1; endpoint p belongs to vertex self.endpoint[p] and p ^ 1 is the
    # opposite end. Labels: 0 free, 1 outer (S), 2 inner (T); bit 4 is a
    # temporary mark used while scanning for a blossom base.

    def __init__(self, n: int, edges: Sequence[tuple[int, int, int]], max_cardinality: bool):
        self.n = n
        self.edges = edges
        self.max_cardinality = max_cardinality
        self.endpoint = [edges[p // 2][p % 2] for p in range(2 * len(edges))]
        self.neighbend: list[list[int]] = [[] for _ in range(n)]
        for k, (i, j, _) in enumerate(edges):
            self.neighbend[i].append(2 * k + 1)
            self.neighbend[j].append(2 * k)
        max_w = max([0] + [w for _, _, w in edges])
        self.mate = [-1] * n
        self.label = [0] * (2 * n)
        self.labelend = [-1] * (2 * n)
        self.inblossom = list(range(n))
        self.blossomparent = [-1] * (2 * n)
        self.blossomchilds: list[Optional[list[int]]] = [None] * (2 * n)
        self.blossombase = list(range(n)) + [-1] * n
        self.blossomendps: list[Optional[list[int]]] = [None] * (2 * n)
        self.bestedge = [-1] * (2 * n)
        self.blossombestedges: list[Optional[list[int]]] = [None] * (2 * n)
        self.unused = list(range(n, 2 * n))
        self.dualvar = [max_w] * n + [0] * n
        self.allowedge = [False] * len(edges)
        self.queue: list[int] = []

    def slack(self, k: int) -> int:
        i, j, w = self.edges[k]
        return self.dualvar[i] + self.dualvar[j] - 2 * w

    def leaves(self, b: int):
        if b < self.n:
            yield b
        else:
            for t in self.blossomchilds[b]:
                if t < self.n:
                    yield t
                else:
                    yield from self.leaves(t)

    def assign_label(self, w: int, t: int, p: int) -> None:
        while True:
            b = self.inblossom[w]
            self.label[w] = self.label[b] = t
            self.labelend[w] = self.labelend[b] = p
            self.bestedge[w] = self.bestedge[b] = -1
            if t == 1:
                self.queue.extend(self.leaves(b))
                return
            # inner blossom: its matched partner becomes outer
            base = self.blossombase[b]
            mp = self.mate[base]
            w, t, p = self.endpoint[mp], 1, mp ^ 1

    def scan_blossom(self, v: int, w: int) -> int:
        """Trace back from ``v`` and ``w``; return the base of a new blossom,
        or -1 if the two paths reach distinct roots (augmenting path)."""
        label, endpoint, labelend = self.label, self.endpoint, self.labelend
        path = []
        base = -1
        while v != -1 or w != -1:
            b = self.inblossom[v]
            if label[b] & 4:
                base = self.blossombase[b]
                break
            path.append(b)
            label[b] = 5
            if labelend[b] == -1:
                v = -1
            else:
                v = endpoint[labelend[b]]
                b = self.inblossom[v]
                v = endpoint[labelend[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            label[b] = 1
        return base

    def add_blossom(self, base: int, k: int) -> None:
        v, w, _ = self.edges[k]
        inblossom, endpoint, labelend = self.inblossom, self.endpoint, self.labelend
        bb, bv, bw = inblossom[base], inblossom[v], inblossom[w]
        b = self.unused.pop()
        self.blossombase[b] = base
        self.blossomparent[b] = -1
        self.blossomparent[bb] = b
        path: list[int] = []
        endps: list[int] = []
        while bv != bb:
            self.blossomparent[bv] = b
            path.append(bv)
            endps.append(labelend[bv])
            v = endpoint[labelend[bv]]
            bv = inblossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            self.blossomparent[bw] = b
            path.append(bw)
            endps.append(labelend[bw] ^ 1)
            w = endpoint[labelend[bw]]
            bw = inblossom[w]
        self.blossomchilds[b] = path
        self.blossomendps[b] = endps
        self.label[b] = 1
        labelend[b] = labelend[bb]
        self.dualvar[b] = 0
        for leaf in self.leaves(b):
            if self.label[inblossom[leaf]] == 2:
                # former inner vertices become outer and must be scanned
                self.queue.append(leaf)
            inblossom[leaf] = b

        best_to = [-1] * (2 * self.n)
        for sub in path:
            if self.blossombestedges[sub] is None:
                nblists = [[p // 2 for p in self.neighbend[leaf]] for leaf in self.leaves(sub)]
            else:
                nblists = [self.blossombestedges[sub]]
            for nblist in nblists:
                for kk in nblist:
                    i, j, _ = self.edges[kk]
                    if inblossom[j] == b:
                        i, j = j, i
                    bj = inblossom[j]
                    if (
                        bj != b
                        and self.label[bj] == 1
                        and (best_to[bj] == -1 or self.slack(kk) < self.slack(best_to[bj]))
                    ):
                        best_to[bj] = kk
            self.blossombestedges[sub] = None
            self.bestedge[sub] = -1
        self.blossombestedges[b] = [kk for kk in best_to if kk != -1]
        self.bestedge[b] = -1
        for kk in self.blossombestedges[b]:
            if self.bestedge[b] == -1 or self.slack(kk) < self.slack(self.bestedge[b]):
                self.bestedge[b] = kk

    def expand_blossom(self, b: int, endstage: bool) -> None:
        n = self.n
        label, labelend, endpoint = self.label, self.labelend, self.endpoint
        for s in self.blossomchilds[b]:
            self.blossomparent[s] = -1
            if s < n:
                self.inblossom[s] = s
            elif endstage and self.dualvar[s] == 0:
                self.expand_blossom(s, endstage)
            else:
                for leaf in self.leaves(s):
                    self.inblossom[leaf] = s
        if not endstage and label[b] == 2:
            # Relabel the sub-blossoms on the even-length path from the
            # entry child to the base as alternating T/S.
            childs = self.blossomchilds[b]
            endps = self.blossomendps[b]
            entrychild = self.inblossom[endpoint[labelend[b] ^ 1]]
            j = childs.index(entrychild)
            if j & 1:
                j -= len(childs)
                jstep, endptrick = 1, 0
            else:
                jstep, endptrick = -1, 1
            p = labelend[b]
            while j != 0:
                label[endpoint[p ^ 1]] = 0
                label[endpoint[endps[j - endptrick] ^ endptrick ^ 1]] = 0
                self.assign_label(endpoint[p ^ 1], 2, p)
                self.allowedge[endps[j - endptrick] // 2] = True
                j += jstep
                p = endps[j - endptrick] ^ endptrick
                self.allowedge[p // 2] = True
                j += jstep
            bv = childs[j]
            label[endpoint[p ^ 1]] = label[bv] = 2
            labelend[endpoint[p ^ 1]] = labelend[bv] = p
            self.bestedge[bv] = -1
            j += jstep
            while childs[j] != entrychild:
                bv = childs[j]
                if label[bv] == 1:
                    j += jstep
                    continue
                reached = -1
                for leaf in self.leaves(bv):
                    if label[leaf] != 0:
                        reached = leaf
                        break
                if reached != -1:
                    label[reached] = 0
                    label[endpoint[self.mate[self.blossombase[bv]]]] = 0
                    self.assign_label(reached, 2, labelend[reached])
                j += jstep
        label[b] = labelend[b] = -1
        self.blossomchilds[b] = self.blossomendps[b] = None
        self.blossombase[b] = -1
        self.blossombestedges[b] = None
        self.bestedge[b] = -1
        self.unused.append(b)

    def augment_blossom(self, b: int, v: int) -> None:
        """Swap matched/unmatched edges inside blossom ``b`` so that ``v``
        becomes its base."""
        n, endpoint = self.n, self.endpoint
        t = v
        while self.blossomparent[t] != b:
            t = self.blossomparent[t]
        if t >= n:
            self.augment_blossom(t, v)
        childs = self.blossomchilds[b]
        endps = self.blossomendps[b]
        i = j = childs.index(t)
        if i & 1:
            j -= len(childs)
            jstep, endptrick = 1, 0
        else:
            jstep, endptrick = -1, 1
        while j != 0:
            j += jstep
            t = childs[j]
            p = endps[j - endptrick] ^ endptrick
            if t >= n:
                self.augment_blossom(t, endpoint[p])
            j += jstep
            t = childs[j]
            if t >= n:
                self.augment_blossom(t, endpoint[p ^ 1])
            self.mate[endpoint[p]] = p ^ 1
            self.mate[endpoint[p ^ 1]] = p
        self.blossomchilds[b] = childs[i:] + childs[:i]
        self.blossomendps[b] = endps[i:] + endps[:i]
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]]

    def augment_matching(self, k: int) -> None:
        v, w, _ = self.edges[k]
        endpoint, labelend, inblossom = self.endpoint, self.labelend, self.inblossom
        for s, p in ((v, 2 * k + 1), (w, 2 * k)):
            while True:
                bs = inblossom[s]
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if labelend[bs] == -1:
                    break
                t = endpoint[labelend[bs]]
                bt = inblossom[t]
                s = endpoint[labelend[bt]]
                j = endpoint[labelend[bt] ^ 1]
                if bt >= self.n:
                    self.augment_blossom(bt, j)
                self.mate[j] = labelend[bt]
                p = labelend[bt] ^ 1

    def _scan_queue(self) -> bool:
        label, inblossom, endpoint = self.label, self.inblossom, self.endpoint
        while self.queue:
            v = self.queue.pop()
            for p in self.neighbend[v]:
                k = p // 2
                w = endpoint[p]
                if inblossom[v] == inblossom[w]:
                    continue
                kslack = 0
                if not self.allowedge[k]:
                    kslack = self.slack(k)
                    if kslack <= 0:
                        self.allowedge[k] = True
                if self.allowedge[k]:
                    if label[inblossom[w]] == 0:
                        self.assign_label(w, 2, p ^ 1)
                    elif label[inblossom[w]] == 1:
                        base = self.scan_blossom(v, w)
                        if base >= 0:
                            self.add_blossom(base, k)
                        else:
                            self.augment_matching(k)
                            return True
                    elif label[w] == 0:
                        label[w] = 2
                        self.labelend[w] = p ^ 1
                elif label[inblossom[w]] == 1:
                    b = inblossom[v]
                    if self.bestedge[b] == -1 or kslack < self.slack(self.bestedge[b]):
                        self.bestedge[b] = k
                elif label[w] == 0:
                    if self.bestedge[w] == -1 or kslack < self.slack(self.bestedge[w]):
                        self.bestedge[w] = k
        return False

    def _dual_step(self) -> bool:
        """Adjust duals by the largest feasible delta. Returns True when the
        stage must end without augmenting (optimum reached)."""
        n = self.n
        label, inblossom, dualvar = self.label, self.inblossom, self.dualvar
        deltatype = -1
        delta = deltaedge = deltablossom = None
        if not self.max_cardinality:
            deltatype = 1
            delta = min(dualvar[:n])
        for v in range(n):
            if label[inblossom[v]] == 0 and self.bestedge[v] != -1:
                d = self.slack(self.bestedge[v])
                if deltatype == -1 or d < delta:
                    delta, deltatype, deltaedge = d, 2, self.bestedge[v]
        for b in range(2 * n):
            if self.blossomparent[b] == -1 and label[b] == 1 and self.bestedge[b] != -1:
                d = self.slack(self.bestedge[b]) // 2
                if deltatype == -1 or d < delta:
                    delta, deltatype, deltaedge = d, 3, self.bestedge[b]
        for b in range(n, 2 * n):
            if (
                self.blossombase[b] >= 0
                and self.blossomparent[b] == -1
                and label[b] == 2
                and (deltatype == -1 or dualvar[b] < delta)
            ):
                delta, deltatype, deltablossom = dualvar[b], 4, b
        if deltatype == -1:
            # max-cardinality mode and no further progress possible
            deltatype = 1
            delta = max(0, min(dualvar[:n]))

        for v in range(n):
            if label[inblossom[v]] == 1:
                dualvar[v] -= delta
            elif label[inblossom[v]] == 2:
                dualvar[v] += delta
        for b in range(n, 2 * n):
            if self.blossombase[b] >= 0 and self.blossomparent[b] == -1:
                if label[b] == 1:
                    dualvar[b] += delta
                elif label[b] == 2:
                    dualvar[b] -= delta

        if deltatype == 1:
            return True
        if deltatype == 2:
            self.allowedge[deltaedge] = True
            i, j, _ = self.edges[deltaedge]
            if label[inblossom[i]] == 0:
                i, j = j, i
            self.queue.append(i)
        elif deltatype == 3:
            self.allowedge[deltaedge] = True
            i, _, _ = self.edges[deltaedge]
            self.queue.append(i)
        else:
            self.expand_blossom(deltablossom, False)
        return False

    def run(self) -> list[int]:
        n = self.n
        for _ in range(n):
            self.label[:] = [0] * (2 * n)
            self.bestedge[:] = [-1] * (2 * n)
            self.blossombestedges[n:] = [None] * n
            self.allowedge[:] = [False] * len(self.edges)
            self.queue[:] = []
            for v in range(n):
                if self.mate[v] == -1 and self.label[self.inblossom[v]] == 0:
                    self.assign_label(v, 1, -1)
            augmented = False
            while True:
                if self._scan_queue():
                    augmented = True
                    break
                if self._dual_step():
                    break
            if not augmented:
                break
            for b in range(n, 2 * n):
                if (
                    self.blossomparent[b] == -1
                    and self.blossombase[b] >= 0
                    and self.label[b] == 1
                    and self.dualvar[b] == 0
                ):
                    self.expand_blossom(b, True)
        return [self.endpoint[p] if p >= 0 else -1 for p in self.mate]


def max_weight_matching(
    edges: Iterable[tuple[int, int, int]], max_cardinality: bool = False
) -> list[tuple[int, int]]:
    """Maximum-weight matching of a general graph with integer weights.

    With ``max_cardinality=True`` the result has maximum cardinality and,
    among those, maximum weight. Returns matched pairs ``(u, v)`` with
    ``u < v``, sorted. Parallel edges keep the heaviest copy.
    """
    best: dict[tuple[int, int], int] = {}
    for u, v, w in edges:
        if u == v:
            raise ValueError(f"self-loop at node {u}")
        key = (u, v) if u < v else (v, u)
        if key not in best or w > best[key]:
            best[key] = w
    if not best:
        return []
    ids = sorted({x for key in best for x in key})
    index = {v: i for i, v in enumerate(ids)}
    # doubled weights keep all duals (including the halved S-S slack) integral
    local = [(index[u], index[v], 2 * w) for (u, v), w in sorted(best.items())]
    mate = _MaxWeightMatcher(len(ids), local, max_cardinality).run()
    return sorted(
        (ids[i], ids[j]) for i, j in enumerate(mate) if j > i
    )


def min_weight_perfect_matching(problem: MatchingProblem) -> list[tuple[int, int]]:
    """Exact minimum-weight perfect matching.

    Raises
    ------
    NoPerfectMatchingError
        If the node count is odd or the graph has no perfect matching.
    """
    nodes = problem.nodes
    if not nodes:
        return []
    if len(nodes) % 2:
        raise NoPerfectMatchingError(f"odd number of nodes ({len(nodes)})")
    cheapest: dict[tuple[int, int], int] = {}
    for u, v, w in problem.edges:
        key = (u, v) if u < v else (v, u)
        if key not in cheapest or w < cheapest[key]:
            cheapest[key] = w
    if not cheapest:
        raise NoPerfectMatchingError("graph has no edges")
    # any constant above the largest weight makes every edge strictly positive
    top = max(cheapest.values()) + 1
    flipped = [(u, v, top - w) for (u, v), w in cheapest.items()]
    pairs = max_weight_matching(flipped, max_cardinality=True)
    if 2 * len(pairs) != len(nodes):
        raise NoPerfectMatchingError("graph has no perfect matching")
    return pairs


def matching_weight(problem: MatchingProblem, pairs: Iterable[tuple[int, int]]) -> int:
    cheapest: dict[tuple[int, int], int] = {}
    for u, v, w in problem.edges:
        key = (u, v) if u < v else (v, u)
        cheapest[key] = min(w, cheapest.get(key, w))
    return sum(cheapest[(u, v) if u < v else (v, u)] for u, v in pairs)


@dataclass
class PathTable:
    """Shortest-path tree from one source: distances plus the edge index
    used to reach each node."""

    source: int
    dist: dict[int, int]
    pred: dict[int, tuple[int, int]]  # node -> (previous node, edge index)

    def path_edges(self, target: int) -> list[int]:
        if target not in self.dist:
            raise KeyError(f"node {target} unreachable from {self.source}")
        out = []
        while target != self.source:
            prev, k = self.pred[target]
            out.append(k)
            target = prev
        out.reverse()
        return out


def shortest_paths_from(edges: Sequence[tuple[int, int, int]], source: int) -> PathTable:
    """Dijkstra over an undirected multigraph given as indexed
    ``(u, v, weight)`` triples. Weights must be nonnegative."""
    adj: dict[int, list[tuple[int, int, int]]] = {source: []}
    for k, (u, v, w) in enumerate(edges):
        if w < 0:
            raise ValueError(f"edge {k} has negative weight {w}")
        adj.setdefault(u, []).append((v, w, k))
        adj.setdefault(v, []).append((u, w, k))
    dist = {source: 0}
    pred: dict[int, tuple[int, int]] = {}
    done = set()
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v, w, k in adj[u]:
            nd = d + w
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                pred[v] = (u, k)
                heapq.heappush(heap, (nd, v))
    return PathTable(source, dist, pred)
