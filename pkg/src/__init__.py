"""ALBO^id Tableau - satisfiability of ALBO^id concepts.

A tableau decision procedure with unrestricted blocking for the description
logic ALBO^id: Boolean role operators, inverse, identity and nominals.
"""

__version__ = "0.1.0"

from src.application import ReasonerService, SearchService, create_reasoner, create_search_service
from src.domain import Model, Problem, Verdict

__all__ = [
    "__version__",
    # Domain
    "Problem",
    "Model",
    "Verdict",
    # Application
    "ReasonerService",
    "SearchService",
    "create_reasoner",
    "create_search_service",
]
