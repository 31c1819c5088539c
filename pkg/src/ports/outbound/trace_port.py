"""Trace Port - Interface for collecting derivation events."""
from typing import Protocol

from src.domain.entities.trace import TraceEvent


class TraceSinkPort(Protocol):
    """
    Port interface for derivation traces.

    The engine reports every rule application, clash and branch outcome.
    """

    def record(self, event: TraceEvent) -> None:
        """Store one event."""
        ...

    def reset(self) -> None:
        """Forget all events (a search strategy restarts the derivation)."""
        ...
