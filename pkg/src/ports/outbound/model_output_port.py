"""Model Output Port - Interface for writing extracted models."""
from typing import Protocol

from src.domain.entities.model import Model


class ModelOutputPort(Protocol):
    """
    Port interface for persisting models of satisfiable problems.

    The main implementation writes the line-oriented model text format.
    """

    def write(self, model: Model, output_path: str) -> str:
        """
        Write a model to the specified output.

        Args:
            model: The model to write
            output_path: Path or destination for the output

        Returns:
            The actual path/location where data was written
        """
        ...

    def read(self, path: str) -> Model:
        """Load a model previously written by this adapter."""
        ...

    def get_format_name(self) -> str:
        """
        Get the name of the output format.

        Returns:
            Format name (e.g., "model-text")
        """
        ...
