"""Empirical runtime and leaf counts as a function of the crossing count."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .generate import GenerationError, GenParams, SplitMix64, gen_one_planar
from .onep import OnePlanarInstance
from .solver import solve

_MAX_TRIES = 64


@dataclass(frozen=True)
class BenchRow:
    k: int
    reps: int
    mean_ms: float
    mean_leaves: float
    max_leaves: int

    @property
    def leaf_bound(self) -> int:
        return 3**self.k


class LeafBoundError(AssertionError):
    """A solve visited more than ``3^k`` leaves."""


def _instances(nodes: int, k: int, reps: int, rng: SplitMix64, lo: int, hi: int, density: float):
    out = []
    for _ in range(reps):
        for _ in range(_MAX_TRIES):
            try:
                out.append(gen_one_planar(GenParams(nodes, k, lo, hi, density, rng.next_u64())))
                break
            except GenerationError:
                continue
        else:
            raise GenerationError(f"could not place {k} crossings on {nodes} nodes")
    return out


def _timed(inst: OnePlanarInstance) -> tuple[float, int]:
    start = time.perf_counter()
    sol = solve(inst)
    return (time.perf_counter() - start) * 1000.0, sol.stats.leaves


def run_bench(
    nodes: int,
    kmax: int,
    seed: int,
    reps: int,
    *,
    weights: tuple[int, int] = (-5, 5),
    density: float = 0.7,
    workers: int = 1,
) -> list[BenchRow]:
    """Solve ``reps`` generated instances for each ``k`` in ``0..kmax``.

    Instance seeds are drawn from one splitmix64 stream before anything
    runs, so the instances (and leaf counts) are the same for any
    ``workers``. Raises :class:`LeafBoundError` if a solve exceeds ``3^k``
    leaves.
    """
    if reps < 1:
        raise ValueError("reps must be positive")
    rng = SplitMix64(seed)
    batches = [(k, _instances(nodes, k, reps, rng, *weights, density)) for k in range(kmax + 1)]
    rows = []
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for k, insts in batches:
            results = list(pool.map(_timed, insts))
            leaves = [n for _, n in results]
            if max(leaves) > 3**k:
                raise LeafBoundError(f"k = {k}: {max(leaves)} leaves exceeds 3^k = {3**k}")
            rows.append(
                BenchRow(
                    k=k,
                    reps=reps,
                    mean_ms=sum(ms for ms, _ in results) / reps,
                    mean_leaves=sum(leaves) / reps,
                    max_leaves=max(leaves),
                )
            )
    return rows


def format_table(rows: list[BenchRow]) -> str:
    lines = [f"{'k':>3} {'reps':>5} {'mean_ms':>10} {'mean_leaves':>12} {'max_leaves':>11} {'3^k':>7}"]
    for r in rows:
        lines.append(
            f"{r.k:>3} {r.reps:>5} {r.mean_ms:>10.2f} {r.mean_leaves:>12.2f} "
            f"{r.max_leaves:>11} {r.leaf_bound:>7}"
        )
    return "\n".join(lines)
