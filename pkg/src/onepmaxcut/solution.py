from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SearchStats:
    """Counters gathered while solving. Times are in seconds."""

    leaves: int = 0
    max_depth: int = 0
    planar_solver_time: float = 0.0
    total_time: float = 0.0

    def absorb(self, other: "SearchStats") -> None:
        self.leaves += other.leaves
        self.max_depth = max(self.max_depth, other.max_depth)
        self.planar_solver_time += other.planar_solver_time


@dataclass(frozen=True)
class CutSolution:
    side: frozenset[int]
    value: int
    stats: SearchStats = field(default_factory=SearchStats, compare=False)

    def sorted_side(self) -> list[int]:
        return sorted(self.side)
