"""Ports - Abstract interfaces for external dependencies."""
from src.ports.outbound import LoggerPort, ModelFinderPort, ModelOutputPort, TraceSinkPort

__all__ = ["LoggerPort", "ModelFinderPort", "ModelOutputPort", "TraceSinkPort"]
