"""Model File Adapter - line-oriented text format for finite models.

    domain 2
    concept A: 0 1
    role Q: (0,1) (1,1)
    ind a = 0

Symbols and elements are sorted ascending, so equal models produce identical
files.
"""
import os
import re

from src.domain.entities.model import Model
from src.domain.exceptions import InvalidModel

MODEL_EXTENSION = ".model"

_DOMAIN = re.compile(r"domain\s+(\d+)$")
_CONCEPT = re.compile(r"concept\s+(\S+?):((?:\s+\d+)*)$")
_ROLE = re.compile(r"role\s+(\S+?):((?:\s+\(\d+,\d+\))*)$")
_PAIR = re.compile(r"\((\d+),(\d+)\)")
_INDIVIDUAL = re.compile(r"ind\s+(\S+)\s+=\s+(\d+)$")


def format_model(model: Model) -> str:
    lines = [f"domain {model.size}"]
    for name in sorted(model.concept_ext):
        elements = "".join(f" {element}" for element in sorted(model.concept_ext[name]))
        lines.append(f"concept {name}:{elements}")
    for name in sorted(model.role_ext):
        pairs = "".join(f" ({x},{y})" for x, y in sorted(model.role_ext[name]))
        lines.append(f"role {name}:{pairs}")
    for name in sorted(model.individual_map):
        lines.append(f"ind {name} = {model.individual_map[name]}")
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> Model:
    """
    Parse the text format back into a model.

    Raises:
        InvalidModel: On malformed lines or out-of-domain elements
    """
    size: int | None = None
    concept_ext: dict[str, frozenset[int]] = {}
    role_ext: dict[str, frozenset[tuple[int, int]]] = {}
    individual_map: dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if match := _DOMAIN.match(line):
            size = int(match.group(1))
        elif match := _CONCEPT.match(line):
            concept_ext[match.group(1)] = frozenset(int(e) for e in match.group(2).split())
        elif match := _ROLE.match(line):
            role_ext[match.group(1)] = frozenset(
                (int(x), int(y)) for x, y in _PAIR.findall(match.group(2))
            )
        elif match := _INDIVIDUAL.match(line):
            individual_map[match.group(1)] = int(match.group(2))
        else:
            raise InvalidModel(f"line {number}: cannot parse '{line}'")
    if size is None:
        raise InvalidModel("missing 'domain' line")
    return Model(
        size=size,
        concept_ext=concept_ext,
        role_ext=role_ext,
        individual_map=individual_map,
    )


def read_model(path: str) -> Model:
    with open(path, encoding="utf-8") as handle:
        return parse_model(handle.read())


class ModelFileWriter:
    """
    Implementation of ModelOutputPort that writes models as text files.
    """

    def write(self, model: Model, output_path: str) -> str:
        """
        Write a model to a file.

        Args:
            model: The model to write
            output_path: Path for the output file. If no extension, .model is added.

        Returns:
            The actual path where data was written
        """
        if not os.path.splitext(output_path)[1]:
            output_path += MODEL_EXTENSION

        output_dir = os.path.dirname(output_path)
        if output_dir and not os.path.exists(output_dir):
            os.makedirs(output_dir)

        with open(output_path, "w", encoding="utf-8") as handle:
            handle.write(format_model(model))
        return output_path

    def read(self, path: str) -> Model:
        return read_model(path)

    def get_format_name(self) -> str:
        """Get the name of the output format."""
        return "model-text"
