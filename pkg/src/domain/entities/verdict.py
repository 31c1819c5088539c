"""Verdicts of a decision run."""
from __future__ import annotations

from dataclasses import dataclass, field

from src.domain.entities.branch import Branch
from src.domain.entities.model import Model


@dataclass
class SearchStatistics:
    """Counters collected while searching for an open branch."""

    steps: int = 0
    branches: int = 0
    closed: int = 0
    open: int = 0
    abandoned: int = 0
    deepest_branch: int = 0
    iterations: int = 0
    elapsed_seconds: float = 0.0
    branch_cap: int | None = None

    def as_dict(self) -> dict[str, int | float | None]:
        return {
            "steps": self.steps,
            "branches": self.branches,
            "closed": self.closed,
            "open": self.open,
            "abandoned": self.abandoned,
            "deepest_branch": self.deepest_branch,
            "iterations": self.iterations,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "branch_cap": self.branch_cap,
        }


@dataclass
class Satisfiable:
    model: Model
    branch_id: str
    branch: Branch
    statistics: SearchStatistics = field(default_factory=SearchStatistics)

    @property
    def label(self) -> str:
        return "SAT"


@dataclass
class Unsatisfiable:
    statistics: SearchStatistics = field(default_factory=SearchStatistics)

    @property
    def label(self) -> str:
        return "UNSAT"


@dataclass
class ResourceLimit:
    reason: str
    statistics: SearchStatistics = field(default_factory=SearchStatistics)

    @property
    def label(self) -> str:
        return f"LIMIT {self.reason}"


Verdict = Satisfiable | Unsatisfiable | ResourceLimit
