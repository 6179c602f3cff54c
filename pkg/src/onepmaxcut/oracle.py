"""Brute-force references for small instances.

These are deliberately naive and share no code path with the solver beyond
the graph container: enumeration of bipartitions and of perfect matchings.
"""

from __future__ import annotations

import numpy as np

from .graph import INT64_MAX, WeightedGraph, WeightOverflowError
from .matching import MatchingProblem, NoPerfectMatchingError
from .onep import CONTRACT_WY, CONTRACT_YZ, DELETE_WZ, Crossing

DEFAULT_LIMIT = 24
_CHUNK = 1 << 16

# Branch -> partition classes of a crossing's endpoints under which that
# branch preserves an optimal cut.
COVERED_CLASSES = {
    CONTRACT_WY: frozenset("abeg"),
    CONTRACT_YZ: frozenset("abcf"),
    DELETE_WZ: frozenset("abdh"),
}


class InstanceTooLargeError(ValueError):
    pass


def _cut_values(g: WeightedGraph, limit: int):
    """Yield ``(masks, values)`` chunks over all sides that leave the
    smallest node on the complement side. Bit ``i`` of a mask is the
    membership of the ``i+1``-th smallest node."""
    nodes = sorted(g.nodes)
    n = len(nodes)
    if n > limit:
        raise InstanceTooLargeError(f"{n} nodes exceeds the oracle limit of {limit}")
    if sum(abs(w) for w in g.edges.values()) > INT64_MAX:
        raise WeightOverflowError("total absolute weight exceeds the signed 64-bit range")
    index = {v: i for i, v in enumerate(nodes)}
    us = np.array([index[u] for u, _ in g.edges], dtype=np.int64)
    vs = np.array([index[v] for _, v in g.edges], dtype=np.int64)
    ws = np.array(list(g.edges.values()), dtype=np.int64)
    shifts = np.arange(n, dtype=np.int64)
    total = 1 << max(n - 1, 0)
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64) << 1
        bits = (masks[:, None] >> shifts[None, :]) & 1
        crossing = bits[:, us] != bits[:, vs]
        yield masks, crossing.astype(np.int64) @ ws, nodes


def _side(mask: int, nodes: list[int]) -> frozenset[int]:
    return frozenset(v for i, v in enumerate(nodes) if (mask >> i) & 1)


def brute_force_max_cut(g: WeightedGraph, limit: int = DEFAULT_LIMIT) -> tuple[int, frozenset[int]]:
    """Exact maximum cut ``(value, side)`` by enumerating ``2^(n-1)`` sides.

    The smallest node is fixed to the complement; ties go to the smallest
    enumeration mask, so the result is deterministic.
    """
    best_value, best_mask, nodes = None, 0, sorted(g.nodes)
    for masks, values, nodes in _cut_values(g, limit):
        i = int(np.argmax(values))
        if best_value is None or values[i] > best_value:
            best_value, best_mask = int(values[i]), int(masks[i])
    if best_value is None:
        return 0, frozenset()
    return best_value, _side(best_mask, nodes)


def all_max_cuts(g: WeightedGraph, limit: int = DEFAULT_LIMIT) -> tuple[int, list[frozenset[int]]]:
    """Optimum value and every optimal side (one per complementary pair)."""
    chunks = list(_cut_values(g, limit))
    if not chunks:
        return 0, [frozenset()]
    best = max(int(values.max()) for _, values, _ in chunks)
    sides = [
        _side(int(m), nodes)
        for masks, values, nodes in chunks
        for m in masks[values == best]
    ]
    return best, sides


def classify_partition(side, chi) -> str:
    """Label ``a``..``h`` of how ``side`` splits the endpoints of ``chi``.

    a: all four together; b/c/d/e: three together without v/w/y/z
    respectively; f: {v, w | y, z}; g: {v, z | w, y}; h: {v, y | w, z}.

    ``chi`` is a :class:`Crossing` (canonical roles) or an explicit
    ``(v, y, w, z)`` tuple, e.g. the roles returned by
    :func:`~onepmaxcut.onep.subdivide_negative`.
    """
    v, y, w, z = chi.roles() if isinstance(chi, Crossing) else chi
    s = side if isinstance(side, (set, frozenset)) else set(side)
    inside = {x: x in s for x in (v, y, w, z)}
    count = sum(inside.values())
    if count in (0, 4):
        return "a"
    if count in (1, 3):
        lonely = count == 1
        odd = next(x for x, flag in inside.items() if flag == lonely)
        return {v: "b", w: "c", y: "d", z: "e"}[odd]
    if inside[v] == inside[w]:
        return "f"
    if inside[v] == inside[z]:
        return "g"
    return "h"


def brute_force_perfect_matching(problem: MatchingProblem, limit: int = 12) -> int:
    """Minimum perfect matching weight by recursive enumeration."""
    nodes = list(problem.nodes)
    if len(nodes) > limit:
        raise InstanceTooLargeError(f"{len(nodes)} nodes exceeds the matching oracle limit of {limit}")
    cheapest: dict[tuple[int, int], int] = {}
    for u, v, w in problem.edges:
        key = (min(u, v), max(u, v))
        cheapest[key] = min(w, cheapest.get(key, w))

    def best(rest: tuple[int, ...]):
        if not rest:
            return 0
        a, others = rest[0], rest[1:]
        found = None
        for i, b in enumerate(others):
            w = cheapest.get((min(a, b), max(a, b)))
            if w is None:
                continue
            sub = best(others[:i] + others[i + 1:])
            if sub is not None and (found is None or w + sub < found):
                found = w + sub
        return found

    value = best(tuple(sorted(nodes)))
    if value is None:
        raise NoPerfectMatchingError("no perfect matching")
    return value
