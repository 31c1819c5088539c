"""Adapters - Concrete implementations of ports."""
from src.adapters.outbound import (
    ConsoleLogger,
    JsonLogger,
    ModelFileWriter,
    TraceRecorder,
    Z3ModelFinder,
)

__all__ = [
    "ConsoleLogger",
    "JsonLogger",
    "ModelFileWriter",
    "TraceRecorder",
    "Z3ModelFinder",
]
