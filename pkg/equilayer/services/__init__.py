"""Services package initialization."""

from .base import BaseService
from .verification import (
    AppendixService,
    DimensionService,
    FixtureOutcome,
    VerificationService,
)

__all__ = [
    "AppendixService",
    "BaseService",
    "DimensionService",
    "FixtureOutcome",
    "VerificationService",
]
