"""Model Finder Port - Interface for brute-force model search."""
from typing import Protocol

from src.domain.entities.model import Model
from src.domain.value_objects.expressions import Concept


class ModelFinderPort(Protocol):
    """
    Port interface for finite model finders.

    Used as an oracle to cross-check the tableau on small inputs.
    """

    def find_model(self, concept: Concept, max_domain: int) -> Model | None:
        """
        Search for a model of the concept.

        Args:
            concept: Concept in core or sugared syntax
            max_domain: Largest domain size to try

        Returns:
            A model, or None if none exists within the bound
        """
        ...

    def get_name(self) -> str:
        """Name of the finder, for logs."""
        ...
