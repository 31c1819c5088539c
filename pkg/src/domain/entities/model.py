"""Model entity: a finite interpretation."""
from __future__ import annotations

from dataclasses import dataclass, field

from src.domain.exceptions import InvalidModel


@dataclass(frozen=True)
class Model:
    """
    A finite interpretation with domain elements 0..size-1.

    Symbols missing from the extension maps are interpreted as empty.
    """

    size: int
    concept_ext: dict[str, frozenset[int]] = field(default_factory=dict)
    role_ext: dict[str, frozenset[tuple[int, int]]] = field(default_factory=dict)
    individual_map: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InvalidModel("the domain of a model must be non-empty")
        for name, extension in self.concept_ext.items():
            if any(not 0 <= element < self.size for element in extension):
                raise InvalidModel(f"extension of concept '{name}' leaves the domain")
        for name, pairs in self.role_ext.items():
            if any(not (0 <= x < self.size and 0 <= y < self.size) for x, y in pairs):
                raise InvalidModel(f"extension of role '{name}' leaves the domain")
        for name, element in self.individual_map.items():
            if not 0 <= element < self.size:
                raise InvalidModel(f"individual '{name}' is mapped outside the domain")

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(range(self.size))

    def concept(self, name: str) -> frozenset[int]:
        return self.concept_ext.get(name, frozenset())

    def role(self, name: str) -> frozenset[tuple[int, int]]:
        return self.role_ext.get(name, frozenset())
