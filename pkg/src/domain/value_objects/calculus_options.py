"""Switches for experimenting with the blocking mechanism."""
from dataclasses import dataclass


@dataclass(frozen=True)
class CalculusOptions:
    """
    Calculus configuration.

    Attributes:
        blocking: Whether the unrestricted blocking rule (ub) is used at all
        blocking_delay: Number of (∃) applications in a branch before (ub) becomes active;
            0 means eager blocking from the root
    """

    blocking: bool = True
    blocking_delay: int = 0

    def __post_init__(self) -> None:
        if self.blocking_delay < 0:
            raise ValueError("blocking_delay must be non-negative")
