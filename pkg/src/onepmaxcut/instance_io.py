"""Line-oriented instance files.

::

    c <comment>
    p onep <n> <m> <k>
    e <u> <v> <w>            (m lines, 1-based ids, signed integer weight)
    x <u1> <v1> <u2> <v2>    (k lines, after all e lines)

A crossing line names its two edges by endpoints; each pair must be a
declared edge and the four ids must be distinct.
"""

from __future__ import annotations

from .graph import INT64_MAX, INT64_MIN, WeightedGraph, edge_key
from .onep import Crossing, OnePlanarInstance


class InstanceParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InstanceParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> OnePlanarInstance:
    header = None
    edges: dict[tuple[int, int], int] = {}
    crossings: list[Crossing] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag, args = tokens[0], tokens[1:]
        if header is None:
            if tag != "p" or len(args) != 4 or args[0] != "onep":
                raise InstanceParseError(lineno, "expected header 'p onep <n> <m> <k>'")
            header = _ints(args[1:], lineno)
            if min(header) < 0:
                raise InstanceParseError(lineno, "header counts must be nonnegative")
            continue
        n, m, k = header
        if tag == "p":
            raise InstanceParseError(lineno, "duplicate header")
        if tag == "e":
            if len(args) != 3:
                raise InstanceParseError(lineno, "expected 'e <u> <v> <w>'")
            if crossings:
                raise InstanceParseError(lineno, "edge line after crossing lines")
            u, v, w = _ints(args, lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise InstanceParseError(lineno, f"node id {x} outside [1, {n}]")
            if u == v:
                raise InstanceParseError(lineno, f"self-loop at node {u}")
            if not INT64_MIN <= w <= INT64_MAX:
                raise InstanceParseError(lineno, f"weight {w} outside the signed 64-bit range")
            key = edge_key(u, v)
            if key in edges:
                raise InstanceParseError(lineno, f"duplicate edge {key}")
            if len(edges) == m:
                raise InstanceParseError(lineno, f"more than m = {m} edge lines")
            edges[key] = w
        elif tag == "x":
            if len(args) != 4:
                raise InstanceParseError(lineno, "expected 'x <u1> <v1> <u2> <v2>'")
            a, b, c, d = _ints(args, lineno)
            if len({a, b, c, d}) != 4:
                raise InstanceParseError(lineno, "crossing endpoints must be pairwise distinct")
            for e in (edge_key(a, b), edge_key(c, d)):
                if e not in edges:
                    raise InstanceParseError(lineno, f"crossing references undeclared edge {e}")
            if len(crossings) == k:
                raise InstanceParseError(lineno, f"more than k = {k} crossing lines")
            crossings.append(Crossing((a, b), (c, d)))
        else:
            raise InstanceParseError(lineno, f"unknown line type {tag!r}")
    if header is None:
        raise InstanceParseError(lineno, "missing header 'p onep <n> <m> <k>'")
    n, m, k = header
    if len(edges) != m:
        raise InstanceParseError(lineno, f"header declares {m} edges, found {len(edges)}")
    if len(crossings) != k:
        raise InstanceParseError(lineno, f"header declares {k} crossings, found {len(crossings)}")
    return OnePlanarInstance(WeightedGraph(range(1, n + 1), edges), tuple(crossings))


def serialize_instance(inst: OnePlanarInstance, comments: tuple[str, ...] = ()) -> str:
    """Canonical text: sorted edges and crossings. Nodes must be ``1..n``."""
    g = inst.graph
    n = len(g.nodes)
    if g.nodes != frozenset(range(1, n + 1)):
        raise ValueError("serialisable instances must use node ids 1..n")
    lines = [f"c {c}" for c in comments]
    lines.append(f"p onep {n} {len(g.edges)} {len(inst.crossings)}")
    lines.extend(f"e {u} {v} {w}" for (u, v), w in sorted(g.edges.items()))
    lines.extend(
        f"x {c.first[0]} {c.first[1]} {c.second[0]} {c.second[1]}" for c in sorted(inst.crossings)
    )
    return "\n".join(lines) + "\n"


def read_instance(path) -> OnePlanarInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(inst: OnePlanarInstance, path, comments: tuple[str, ...] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(inst, comments))
