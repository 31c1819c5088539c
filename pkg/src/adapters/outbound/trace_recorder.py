"""Trace Recorder Adapter - keeps derivation events in memory."""
from src.domain.entities.trace import TraceEvent


class TraceRecorder:
    """
    Implementation of TraceSinkPort that stores events in arrival order.

    The search resets the recorder when it restarts a derivation, so after a
    run the recorder holds exactly the derivation the verdict came from.
    """

    def __init__(self) -> None:
        self._events: list[TraceEvent] = []
        self._resets = 0

    def record(self, event: TraceEvent) -> None:
        self._events.append(event)

    def reset(self) -> None:
        self._events.clear()
        self._resets += 1

    @property
    def events(self) -> list[TraceEvent]:
        return list(self._events)

    @property
    def resets(self) -> int:
        """How many times the derivation was restarted."""
        return self._resets

    def __len__(self) -> int:
        return len(self._events)
