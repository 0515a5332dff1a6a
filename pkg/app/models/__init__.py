from .schemas import (
    Document,
    FuzzySubsetDocument,
    GradualSubsetDocument,
    GroupDocument,
    FuzzySubgroupDocument,
    SystemDocument,
    EngineResponse,
)

__all__ = [
    "Document",
    "FuzzySubsetDocument",
    "GradualSubsetDocument",
    "GroupDocument",
    "FuzzySubgroupDocument",
    "SystemDocument",
    "EngineResponse",
]
