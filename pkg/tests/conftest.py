"""Test configuration and shared fixtures."""
import random
from pathlib import Path

import pytest

from src.adapters.outbound.console_logger import ConsoleLogger
from src.adapters.outbound.trace_recorder import TraceRecorder
from src.application.search_service import SearchService

# Derivation fixtures in concrete syntax
ROLE_UNION_WITNESS = "not (not some (Q or not Q) . A or some Q . A)"
EVERYWHERE_SUCCESSOR = "not some (Q' or not Q') . not some Q . A"
UNSAT_SUCCESSOR_CHAIN = (
    "not (some (Q' or not Q') . not some Q . A or not some Q'' . not some Q . A)"
)
GLOBAL_EFFECT = (
    "((some Q . A and some Q' . A) and "
    "(some Q'' . not some Q'' . some inv(Q') . (A or not A) and "
    "not some Q'' . some not Q'' . not some inv(Q') . (A or not A)))"
)


@pytest.fixture
def logger() -> ConsoleLogger:
    """Logger that stays quiet unless something goes wrong."""
    return ConsoleLogger(level="ERROR", use_colors=False)


@pytest.fixture
def recorder() -> TraceRecorder:
    return TraceRecorder()


@pytest.fixture
def search(logger: ConsoleLogger) -> SearchService:
    """Search service with default (eager) blocking."""
    return SearchService(logger=logger)


@pytest.fixture
def rng() -> random.Random:
    """Seeded generator so randomized suites are reproducible."""
    return random.Random(20240917)


@pytest.fixture
def problems_dir() -> Path:
    """Directory with the .albo example problems."""
    return Path(__file__).resolve().parent.parent / "problems"
