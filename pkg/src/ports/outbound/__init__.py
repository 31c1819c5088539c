"""Outbound ports - Interfaces for driven adapters."""
from src.ports.outbound.logger_port import LoggerPort
from src.ports.outbound.model_finder_port import ModelFinderPort
from src.ports.outbound.model_output_port import ModelOutputPort
from src.ports.outbound.trace_port import TraceSinkPort

__all__ = ["LoggerPort", "ModelFinderPort", "ModelOutputPort", "TraceSinkPort"]
