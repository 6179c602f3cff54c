"""Seeded random planar and 1-planar instances.

All randomness comes from a splitmix64 stream, so a given parameter set
always produces the same instance, byte for byte.

Planar base: start from the triangle 1-2-3, insert nodes 4..n one at a
time into a uniformly chosen face (joined to its three corners), then
delete random non-bridge edges until the edge count reaches the density
target. The rotation system is maintained throughout, so the faces of the
final embedding are known exactly.

Crossings: pick an open region with four distinct corners a, b, c, d in
boundary order and add the chords (a, c) and (b, d). They cross once
inside the region and nothing else, so the crossing list is realisable by
construction. The chords cut the region into four smaller ones, each
bounded by the corners between two consecutive chord ends; those stay
open for further crossings.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .graph import WeightedGraph, edge_key
from .onep import Crossing, OnePlanarInstance
from .planar import trace_faces

_MASK = (1 << 64) - 1


class SplitMix64:
    """splitmix64 generator (Steele, Lea and Flood; Vigna's constants)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``; rejects the biased tail of the
        64-bit range before reducing modulo ``n``."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class GenParams:
    nodes: int
    crossings: int = 0
    weight_lo: int = -5
    weight_hi: int = 5
    # fraction of the 3n - 6 triangulation edges kept; 1.0 leaves no face
    # with four distinct corners, so no room for crossings
    density: float = 0.7
    seed: int = 0

    def check(self) -> None:
        if self.crossings < 0:
            raise GenerationError("crossings must be nonnegative")
        if self.weight_lo > self.weight_hi:
            raise GenerationError("weight range is empty")
        if self.nodes < 3:
            raise GenerationError("need at least 3 nodes")
        if not 0.0 < self.density <= 1.0:
            raise GenerationError("density must lie in (0, 1]")


def _target_edges(params: GenParams) -> int:
    full = 3 * params.nodes - 6 if params.nodes > 3 else 3
    target = math.floor(params.density * full + 0.5)
    if target < params.nodes - 1:
        raise GenerationError(
            f"density {params.density} leaves {target} edges, fewer than the "
            f"{params.nodes - 1} needed for connectivity"
        )
    return target


def _connected_without(rotation: dict[int, list[int]], u: int, v: int) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in rotation[a]:
            if (a, b) in ((u, v), (v, u)) or b in seen:
                continue
            if b == v:
                return True
            seen.add(b)
            stack.append(b)
    return False


def _planar_base(params: GenParams, rng: SplitMix64) -> dict[int, list[int]]:
    rotation = {1: [2, 3], 2: [3, 1], 3: [1, 2]}
    for x in range(4, params.nodes + 1):
        faces = trace_faces(rotation)
        (a, b), (_, c), _ = faces[rng.below(len(faces))]
        for at, after in ((b, a), (c, b), (a, c)):
            rot = rotation[at]
            rot.insert(rot.index(after) + 1, x)
        rotation[x] = [b, a, c]

    target = _target_edges(params)
    candidates = sorted(edge_key(u, v) for u in rotation for v in rotation[u] if u < v)
    m = len(candidates)
    while m > target:
        if not candidates:
            raise GenerationError(f"cannot delete down to {target} edges and stay connected")
        u, v = candidates.pop(rng.below(len(candidates)))
        if not _connected_without(rotation, u, v):
            continue
        rotation[u].remove(v)
        rotation[v].remove(u)
        m -= 1
    return rotation


def _pick_chords(walk: list[int], edges: set, rng: SplitMix64) -> Optional[tuple[int, int, int, int]]:
    """Corner positions ``i < j < k < l`` of ``walk`` whose chords are new."""

    def ok(i, j, k, l):
        a, b, c, d = walk[i], walk[j], walk[k], walk[l]
        return (
            len({a, b, c, d}) == 4
            and edge_key(a, c) not in edges
            and edge_key(b, d) not in edges
        )

    L = len(walk)
    if L <= 12:
        quads = [q for q in itertools.combinations(range(L), 4) if ok(*q)]
        if not quads:
            return None
        return quads[rng.below(len(quads))]
    for _ in range(256):
        q = sorted({rng.below(L) for _ in range(4)})
        if len(q) == 4 and ok(*q):
            return tuple(q)
    return None


def _open(walk: list[int]) -> bool:
    return len(set(walk)) >= 4


def gen_one_planar(params: GenParams) -> OnePlanarInstance:
    """Random instance with ``params.crossings`` crossings, realisable as a
    1-planar drawing by construction."""
    params.check()
    rng = SplitMix64(params.seed)
    rotation = _planar_base(params, rng)
    edges = {edge_key(u, v) for u in rotation for v in rotation[u]}
    regions = [w for w in ([a for a, _ in face] for face in trace_faces(rotation)) if _open(w)]
    crossings = []
    while len(crossings) < params.crossings:
        if not regions:
            raise GenerationError(
                f"placed {len(crossings)} of {params.crossings} crossings; no eligible face left"
            )
        walk = regions.pop(rng.below(len(regions)))
        pos = _pick_chords(walk, edges, rng)
        if pos is None:
            continue
        i, j, k, l = pos
        a, b, c, d = (walk[t] for t in pos)
        edges.add(edge_key(a, c))
        edges.add(edge_key(b, d))
        crossings.append(Crossing((a, c), (b, d)))
        for part in (walk[i:j + 1], walk[j:k + 1], walk[k:l + 1], walk[l:] + walk[:i + 1]):
            if _open(part):
                regions.append(part)
    weighted = {e: rng.randint(params.weight_lo, params.weight_hi) for e in sorted(edges)}
    graph = WeightedGraph(range(1, params.nodes + 1), weighted)
    return OnePlanarInstance(graph, tuple(sorted(crossings)))


def gen_planar(params: GenParams) -> OnePlanarInstance:
    """Random connected planar instance (no crossings)."""
    if params.crossings:
        raise GenerationError("gen_planar produces crossing-free instances; use gen_one_planar")
    return gen_one_planar(params)
