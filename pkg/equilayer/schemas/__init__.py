"""Pydantic schemas."""

from .common import BaseSchema, ErrorResponse, FrozenSchema
from .layer import FactorSpec, LayerSpec
from .payloads import (
    AlgebraElementPayload,
    AppendixFile,
    AppendixFixture,
    BasisMatrixPayload,
    BratteliLevelPayload,
    CheckResult,
    DimensionReport,
    FixtureSource,
    PatternMatrixPayload,
    ProductBasisPayload,
    SetPartitionPayload,
    TermPayload,
    VerificationReport,
)

__all__ = [
    "AlgebraElementPayload",
    "AppendixFile",
    "AppendixFixture",
    "BaseSchema",
    "BasisMatrixPayload",
    "BratteliLevelPayload",
    "CheckResult",
    "DimensionReport",
    "ErrorResponse",
    "FactorSpec",
    "FixtureSource",
    "FrozenSchema",
    "LayerSpec",
    "PatternMatrixPayload",
    "ProductBasisPayload",
    "SetPartitionPayload",
    "TermPayload",
    "VerificationReport",
]
