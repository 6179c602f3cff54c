"""Recursive three-way branching on crossings down to planar leaves."""

from __future__ import annotations

import time
from concurrent.futures import Executor
from typing import Optional

from .graph import CutSide, cut_value, split
from .onep import (
    BranchTrace,
    CrossingError,
    OnePlanarInstance,
    branch,
    select_crossing,
    validate,
)
from .planar import NonPlanarError, planar_max_cut
from .solution import CutSolution, SearchStats


class InconsistentEmbeddingError(RuntimeError):
    """A leaf left after removing every listed crossing is not planar, so
    the crossing list did not come from a 1-planar embedding."""


def project_back(side: CutSide, trace: BranchTrace) -> CutSide:
    """Map a side of a child instance to a side of its parent: split the
    merged node for contractions, keep the side for deletions, and drop
    the helper node of a subdivided negative edge."""
    s = frozenset(side) if trace.record is None else split(side, trace.record)
    if trace.subdivision is not None:
        s = s - {trace.subdivision}
    return s


def _leaf(inst: OnePlanarInstance, depth: int, stats: SearchStats) -> tuple[CutSide, int]:
    start = time.perf_counter()
    try:
        sol = planar_max_cut(inst.graph)
    except NonPlanarError as exc:
        raise InconsistentEmbeddingError(
            f"leaf at depth {depth} is not planar; the crossing list does not "
            "describe a 1-planar embedding"
        ) from exc
    stats.planar_solver_time += time.perf_counter() - start
    stats.leaves += 1
    stats.max_depth = max(stats.max_depth, depth)
    return sol.side, sol.value


def _pick(results: list[tuple[CutSide, int]], traces: list[BranchTrace]) -> tuple[CutSide, int]:
    # strict '>' keeps the lowest branch index on ties
    j = 0
    for i in range(1, len(results)):
        if results[i][1] > results[j][1]:
            j = i
    side, value = results[j]
    return project_back(side, traces[j]), value + traces[j].offset


def _search(inst: OnePlanarInstance, depth: int, stats: SearchStats) -> tuple[CutSide, int]:
    if not inst.crossings:
        return _leaf(inst, depth, stats)
    children = branch(inst, select_crossing(inst))
    results = [_search(child, depth + 1, stats) for child, _ in children]
    return _pick(results, [trace for _, trace in children])


def _subtree(inst: OnePlanarInstance, depth: int) -> tuple[CutSide, int, SearchStats]:
    stats = SearchStats()
    side, value = _search(inst, depth, stats)
    return side, value, stats


def _search_parallel(
    inst: OnePlanarInstance, depth: int, split_depth: int, executor: Executor, stats: SearchStats
) -> tuple[CutSide, int]:
    # Expand the top levels, farm out subtrees, then reduce in branch order.
    def plan(node: OnePlanarInstance, d: int):
        if d >= split_depth or not node.crossings:
            return executor.submit(_subtree, node, d)
        kids = branch(node, select_crossing(node))
        return [trace for _, trace in kids], [plan(child, d + 1) for child, _ in kids]

    def reduce(node) -> tuple[CutSide, int]:
        if isinstance(node, tuple):
            traces, subs = node
            return _pick([reduce(s) for s in subs], traces)
        side, value, sub_stats = node.result()
        stats.absorb(sub_stats)
        return side, value

    return reduce(plan(inst, depth))


def solve(
    inst: OnePlanarInstance,
    *,
    executor: Optional[Executor] = None,
    split_depth: int = 1,
    check: bool = True,
) -> CutSolution:
    """Maximum cut of an embedded 1-planar graph given by its crossing list.

    Parameters
    ----------
    inst : OnePlanarInstance
        Graph plus crossings. Must pass :func:`validate` without errors.
    executor : concurrent.futures.Executor, optional
        If given, the subtrees below the first ``split_depth`` branching
        levels are evaluated on it. The result does not depend on it.
    check : bool
        Validate the input first.

    Returns
    -------
    CutSolution
        Side, value and search statistics. The value is re-evaluated on the
        input graph before returning.

    Raises
    ------
    CrossingError
        The instance has validation errors.
    InconsistentEmbeddingError
        A leaf graph is not planar.
    """
    start = time.perf_counter()
    if check:
        report = validate(inst)
        if not report.ok:
            raise CrossingError("; ".join(report.errors))
    stats = SearchStats()
    if executor is None:
        side, value = _search(inst, 0, stats)
    else:
        side, value = _search_parallel(inst, 0, split_depth, executor, stats)
    if cut_value(inst.graph, side) != value:
        raise RuntimeError("projected side does not reproduce the reported cut value")
    stats.total_time = time.perf_counter() - start
    return CutSolution(frozenset(side), value, stats)
