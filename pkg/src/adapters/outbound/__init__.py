"""Outbound adapters - Logging, model files, traces and the model finder."""
from src.adapters.outbound.console_logger import ConsoleLogger
from src.adapters.outbound.json_logger import JsonLogger
from src.adapters.outbound.model_file import ModelFileWriter, format_model, parse_model, read_model
from src.adapters.outbound.trace_recorder import TraceRecorder
from src.adapters.outbound.trace_renderers import TraceMode, render_trace
from src.adapters.outbound.z3_model_finder import Z3ModelFinder, enumerate_model

__all__ = [
    "ConsoleLogger",
    "JsonLogger",
    "ModelFileWriter",
    "format_model",
    "parse_model",
    "read_model",
    "TraceRecorder",
    "TraceMode",
    "render_trace",
    "Z3ModelFinder",
    "enumerate_model",
]
