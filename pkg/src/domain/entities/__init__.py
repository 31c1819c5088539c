"""Domain entities for the ALBO^id tableau."""
from src.domain.entities.branch import Branch
from src.domain.entities.equality_classes import EqualityClasses
from src.domain.entities.model import Model
from src.domain.entities.problem import Problem
from src.domain.entities.trace import TraceEvent, TraceEventKind
from src.domain.entities.verdict import (
    ResourceLimit,
    Satisfiable,
    SearchStatistics,
    Unsatisfiable,
    Verdict,
)

__all__ = [
    "Branch",
    "EqualityClasses",
    "Model",
    "Problem",
    "TraceEvent",
    "TraceEventKind",
    "Satisfiable",
    "Unsatisfiable",
    "ResourceLimit",
    "SearchStatistics",
    "Verdict",
]
