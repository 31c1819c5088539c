"""Domain exceptions for the ALBO^id reasoner.

Every error raised by the package derives from AlboError so callers (the CLI in
particular) can map failures onto exit statuses without catching bare Exception.
"""


class AlboError(Exception):
    """Base class for all reasoner errors."""


class InputError(AlboError):
    """The user supplied a problem that cannot be processed."""


class ParseError(InputError):
    """Malformed problem text."""

    def __init__(self, line: int, col: int, message: str):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"{line}:{col}: {message}")


class AlphabetClash(InputError):
    """One identifier is used in more than one alphabet (individual, concept, role)."""

    def __init__(self, symbol: str, kinds: tuple[str, ...]):
        self.symbol = symbol
        self.kinds = kinds
        super().__init__(f"identifier '{symbol}' is used as {' and '.join(kinds)}")


class EmptyProblem(InputError):
    """A problem without any goal concept."""

    def __init__(self, message: str = "problem has no 'sat' goal concept"):
        super().__init__(message)


class NormalizationError(AlboError):
    """An expression is not in the syntactic form a transformation expects."""


class RuleNotApplicable(AlboError):
    """A rule instance was applied to a branch where it is not applicable."""


class BoundOverflow(AlboError):
    """A bound exceeds the supported arithmetic width."""

    def __init__(self, name: str, width: int):
        self.name = name
        self.width = width
        super().__init__(f"{name} exceeds {width}-bit arithmetic")


class UnboundIndividual(AlboError):
    """A concept mentions an individual the model does not interpret."""

    def __init__(self, individual: str):
        self.individual = individual
        super().__init__(f"individual '{individual}' is not interpreted by the model")


class NotExpanded(AlboError):
    """A model was requested from a branch that still has applicable rules."""


class BranchClosed(AlboError):
    """A model was requested from a closed branch."""


class InvalidModel(AlboError):
    """A model violates its structural invariants or a model file is malformed."""


class InvariantViolation(AlboError):
    """An internal consistency check failed (e.g. an extracted model does not satisfy its input)."""
