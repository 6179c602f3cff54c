"""1-planar instances: a weighted graph together with the crossing list of a
1-planar embedding, plus the bookkeeping needed to branch on a crossing.

Crossing roles follow one fixed convention. For a canonical crossing
``{(v, y), (w, z)}`` the first edge is ``(v, y)`` with ``v < y`` and the
second is ``(w, z)`` with ``w < z``. Branching contracts ``w, y``, then
``y, z``, then deletes ``(w, z)``.

Deleting ``(w, z)`` only preserves optimality when its weight is
nonnegative: a child optimum may separate ``w`` and ``z``, which is free in
``G - e_wz`` but costs ``c_wz`` in ``G``. A negative ``(w, z)`` is therefore
first subdivided into ``w - p - z`` with both halves weighing ``|c_wz|``.
For every side, the best placement of ``p`` makes the path worth exactly
``c_wz + 2|c_wz|``. The crossing moves onto ``(p, z)`` and the branching
runs on the subdivided graph with ``p`` in the role of ``w``; child values
are shifted back by ``-2|c_wz|`` and ``p`` is dropped on projection.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Optional

from .graph import (
    ContractionRecord,
    Edge,
    WeightedGraph,
    contract,
    delete_edge,
    edge_key,
)

CONTRACT_WY = "contract-wy"
CONTRACT_YZ = "contract-yz"
DELETE_WZ = "delete-wz"
BRANCH_KINDS = (CONTRACT_WY, CONTRACT_YZ, DELETE_WZ)


class CrossingError(ValueError):
    """An invalid crossing or crossing list."""


@dataclass(frozen=True, order=True)
class Crossing:
    """Two edges that cross once. Stored canonically: each edge as a sorted
    pair and the lexicographically smaller edge first."""

    first: Edge
    second: Edge

    def __post_init__(self):
        a, b = edge_key(*self.first), edge_key(*self.second)
        if b < a:
            a, b = b, a
        object.__setattr__(self, "first", a)
        object.__setattr__(self, "second", b)

    @property
    def edges(self) -> tuple[Edge, Edge]:
        return (self.first, self.second)

    @property
    def endpoints(self) -> tuple[int, int, int, int]:
        return self.first + self.second

    def is_proper(self) -> bool:
        return len(set(self.endpoints)) == 4

    def roles(self) -> tuple[int, int, int, int]:
        """``(v, y, w, z)`` for this crossing."""
        if not self.is_proper():
            raise CrossingError(f"crossing {self} has a shared endpoint")
        (v, y), (w, z) = self.first, self.second
        return v, y, w, z

    def rewrite(self, a: int, b: int, merged: int) -> "Crossing":
        def sub(x):
            return merged if x in (a, b) else x

        (p, q), (r, s) = self.first, self.second
        return Crossing((sub(p), sub(q)), (sub(r), sub(s)))

    def __str__(self):
        return f"{{{self.first}, {self.second}}}"


@dataclass(frozen=True)
class OnePlanarInstance:
    graph: WeightedGraph
    crossings: tuple[Crossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))

    @property
    def k(self) -> int:
        return len(self.crossings)

    def canonical(self) -> "OnePlanarInstance":
        return OnePlanarInstance(self.graph, tuple(sorted(self.crossings)))


@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def lines(self) -> list[str]:
        return [f"error: {e}" for e in self.errors] + [f"warning: {w}" for w in self.warnings]


def bound_warnings(n: int, m: int, k: int) -> list[str]:
    """Necessary conditions for a 1-planar embedding with ``k`` crossings."""
    out = []
    if n >= 3:
        if m > 4 * n - 8:
            out.append(f"m = {m} exceeds 4n - 8 = {4 * n - 8}; no 1-planar embedding exists")
        if k > 2 * n - 4:
            out.append(f"k = {k} exceeds 2n - 4 = {2 * n - 4}; no 1-planar embedding exists")
    return out


def validate(inst: OnePlanarInstance) -> ValidationReport:
    """Check the crossing list against the graph.

    Only local consistency and the edge/crossing count bounds are checked;
    whether the list is realisable by an actual 1-planar drawing is not
    (that question is NP-hard). A bad list surfaces later as a non-planar
    leaf.
    """
    report = ValidationReport()
    g = inst.graph
    owner: dict[Edge, Crossing] = {}
    for c in inst.crossings:
        if c.first == c.second:
            report.errors.append(f"crossing {c} pairs an edge with itself")
            continue
        for e in c.edges:
            if e[0] == e[1]:
                report.errors.append(f"crossing {c} references self-loop {e}")
            elif e not in g.edges:
                report.errors.append(f"crossing {c} references unknown edge {e}")
        if not c.is_proper():
            report.errors.append(f"crossing {c} has a shared endpoint")
        for e in c.edges:
            if e in owner and owner[e] != c:
                report.errors.append(f"edge {e} is crossed twice ({owner[e]} and {c})")
            elif e in owner:
                report.errors.append(f"crossing {c} listed twice")
            owner[e] = c
    report.warnings.extend(
        bound_warnings(g.number_of_nodes(), g.number_of_edges(), len(inst.crossings))
    )
    return report


def validate_edge_list(edges: Iterable[tuple[int, int, int]]) -> list[str]:
    """Errors for raw edge lists before they are merged into a simple graph."""
    errors = []
    seen = set()
    for u, v, _ in edges:
        if u == v:
            errors.append(f"self-loop at node {u}")
            continue
        key = edge_key(u, v)
        if key in seen:
            errors.append(f"duplicate edge {key}")
        seen.add(key)
    return errors


def update(
    crossings: Sequence[Crossing], a: int, b: int, merged: int
) -> tuple[Crossing, ...]:
    """Crossing list after contracting ``a`` and ``b`` into ``merged``.

    Crossings that contain both ``a`` and ``b`` are dissolved by the
    contraction and dropped; ``a`` and ``b`` are renamed in the rest. When
    two crossed edges ``(u, a)`` and ``(u, b)`` collapse into one edge only
    the crossing of the lexicographically smaller original edge survives.
    Linear in ``len(crossings)``.
    """
    survivors: list[Optional[Crossing]] = []
    claimed: dict[Edge, tuple[Edge, int]] = {}
    for c in crossings:
        ends = c.endpoints
        if a in ends and b in ends:
            continue
        new = c.rewrite(a, b, merged)
        if new == c:
            survivors.append(c)
            continue
        # at most one edge of a surviving crossing touches {a, b}
        touched = next(e for e in c.edges if a in e or b in e)
        target = edge_key(*(merged if x in (a, b) else x for x in touched))
        idx = len(survivors)
        survivors.append(new)
        if target in claimed:
            prev_orig, prev_idx = claimed[target]
            if touched < prev_orig:
                survivors[prev_idx] = None
                claimed[target] = (touched, idx)
            else:
                survivors[idx] = None
        else:
            claimed[target] = (touched, idx)
    return tuple(c for c in survivors if c is not None)


@dataclass(frozen=True)
class BranchTrace:
    """How a child was derived from its parent.

    ``subdivision`` is the helper node inserted into a negative ``(w, z)``
    (``None`` otherwise) and ``offset`` the amount to add to a child cut
    value to get the parent cut value.
    """

    kind: str
    record: Optional[ContractionRecord] = None
    deleted: Optional[Edge] = None
    subdivision: Optional[int] = None
    offset: int = 0

    def __post_init__(self):
        if self.kind not in BRANCH_KINDS:
            raise ValueError(f"unknown branch kind {self.kind!r}")
        if (self.record is not None) != (self.kind != DELETE_WZ):
            raise ValueError("a contraction trace needs a record, a deletion trace none")


def select_crossing(
    inst: OnePlanarInstance, key: Optional[Callable[[Crossing], object]] = None
) -> Crossing:
    """Crossing to branch on: the lexicographically smallest by default.

    ``key`` is a hook for other selection strategies.
    """
    if not inst.crossings:
        raise CrossingError("no crossings to select from")
    return min(inst.crossings, key=key) if key else min(inst.crossings)


def subdivide_negative(
    inst: OnePlanarInstance, chi: Crossing
) -> tuple[OnePlanarInstance, Crossing, tuple[int, int, int, int], Optional[int], int]:
    """Instance actually branched on for ``chi``.

    Returns ``(instance, crossing, (v, y, w, z), helper, offset)``. If the
    edge ``(w, z)`` has nonnegative weight this is ``inst`` and ``chi``
    unchanged, no helper node and offset 0. Otherwise ``(w, z)`` is
    replaced by the path ``w - p - z``, ``p`` takes the role of ``w`` and
    ``offset = 2 * c_wz``.
    """
    if chi not in inst.crossings:
        raise CrossingError(f"crossing {chi} not in instance")
    v, y, w, z = chi.roles()
    g = inst.graph
    c = g.weight(w, z)
    if c >= 0:
        return inst, chi, (v, y, w, z), None, 0
    p = max(g.nodes) + 1
    edges = dict(g.edges)
    del edges[edge_key(w, z)]
    edges[edge_key(w, p)] = -c
    edges[edge_key(p, z)] = -c
    moved = Crossing((v, y), (p, z))
    xs = tuple(moved if x == chi else x for x in inst.crossings)
    return OnePlanarInstance(WeightedGraph(g.nodes | {p}, edges), xs), moved, (v, y, p, z), p, 2 * c


def branch(
    inst: OnePlanarInstance, chi: Crossing
) -> list[tuple[OnePlanarInstance, BranchTrace]]:
    """The three children of ``inst`` for crossing ``chi``, in branch order
    ``G/wy``, ``G/yz``, ``G - e_wz`` (taken on the subdivided graph when
    ``c_wz < 0``, see :func:`subdivide_negative`)."""
    base, chi, (v, y, w, z), helper, offset = subdivide_negative(inst, chi)
    g, xs = base.graph, base.crossings
    children = []
    for kind, (a, b) in ((CONTRACT_WY, (w, y)), (CONTRACT_YZ, (y, z))):
        child, rec = contract(g, a, b)
        trace = BranchTrace(kind, rec, subdivision=helper, offset=offset)
        children.append((OnePlanarInstance(child, update(xs, a, b, rec.merged_node)), trace))
    rest = tuple(c for c in xs if c != chi)
    trace = BranchTrace(DELETE_WZ, deleted=edge_key(w, z), subdivision=helper, offset=offset)
    children.append((OnePlanarInstance(delete_edge(g, w, z), rest), trace))
    return children
