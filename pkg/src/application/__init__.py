"""Application layer - Use cases and business logic."""
from src.application.reasoner_service import ReasonerService, SolveReport, create_reasoner
from src.application.search_service import SearchService, create_search_service, schedule
from src.application.tableau_engine import TableauEngine

__all__ = [
    "ReasonerService",
    "SolveReport",
    "create_reasoner",
    "SearchService",
    "create_search_service",
    "schedule",
    "TableauEngine",
]
