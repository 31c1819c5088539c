"""Inbound adapters - Entry points (CLI, problem files)."""
from src.adapters.inbound.problem_parser import (
    parse_concept,
    parse_problem,
    parse_role,
    read_problem,
)

__all__ = ["parse_problem", "parse_concept", "parse_role", "read_problem"]
