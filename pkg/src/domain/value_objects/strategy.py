"""Search strategies and resource limits."""
from dataclasses import dataclass
from enum import Enum


class StrategyName(str, Enum):
    """Strategy selectors accepted on the command line."""

    BFS = "bfs"
    DFS_ID = "dfs-id"
    DFS_AHB = "dfs-ahb"

    @property
    def display_name(self) -> str:
        mapping = {
            StrategyName.BFS: "breadth-first",
            StrategyName.DFS_ID: "depth-first, iterative deepening",
            StrategyName.DFS_AHB: "depth-first, avoid huge branch",
        }
        return mapping[self]


@dataclass(frozen=True)
class BreadthFirst:
    """FIFO over branches; each turn expands a branch by at most `quantum` steps."""

    quantum: int = 256

    def __post_init__(self) -> None:
        if self.quantum < 1:
            raise ValueError("quantum must be at least 1")

    @property
    def name(self) -> StrategyName:
        return StrategyName.BFS


@dataclass(frozen=True)
class IterativeDeepening:
    """Depth-first search bounded by rule applications per branch, deepened each round."""

    initial_depth: int = 64
    increment: int = 64

    def __post_init__(self) -> None:
        if self.initial_depth < 1:
            raise ValueError("initial_depth must be at least 1")
        if self.increment < 1:
            raise ValueError("increment must be at least 1")

    @property
    def name(self) -> StrategyName:
        return StrategyName.DFS_ID


@dataclass(frozen=True)
class AvoidHugeBranch:
    """Depth-first search that abandons branches longer than the step bound."""

    @property
    def name(self) -> StrategyName:
        return StrategyName.DFS_AHB


Strategy = BreadthFirst | IterativeDeepening | AvoidHugeBranch


def strategy_for(
    name: StrategyName | str, initial_depth: int = 64, increment: int = 64
) -> Strategy:
    """Build a strategy value from its command-line name."""
    match StrategyName(name):
        case StrategyName.BFS:
            return BreadthFirst()
        case StrategyName.DFS_ID:
            return IterativeDeepening(initial_depth=initial_depth, increment=increment)
        case StrategyName.DFS_AHB:
            return AvoidHugeBranch()
    raise ValueError(f"unknown strategy: {name}")


@dataclass(frozen=True)
class Limits:
    """
    Resource limits for one decision run. None means unlimited.

    Under the avoid-huge-branch strategy an unset max_steps_per_branch is
    replaced by the computed step bound.
    """

    max_steps_per_branch: int | None = None
    max_total_steps: int | None = None
    wall_clock: float | None = None

    def __post_init__(self) -> None:
        for name in ("max_steps_per_branch", "max_total_steps"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.wall_clock is not None and self.wall_clock <= 0:
            raise ValueError("wall_clock must be positive")
