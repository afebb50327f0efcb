"""JSON wire formats for bases, algebra elements, quiver levels and reports."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Literal

from pydantic import Field, RootModel, field_validator

from equilayer.models.diagram import AlgebraElement, BasisKind
from equilayer.models.matrix import BasisMatrix
from equilayer.models.pattern import PatternMatrix
from equilayer.models.product import ProductBasisMatrix
from equilayer.models.quiver import BratteliLevel
from equilayer.models.set_partition import SetPartition, ShapeSplit
from equilayer.schemas.common import BaseSchema


class SetPartitionPayload(RootModel[list[list[int]]]):
    """A set partition as its blocks, ``[[1,3],[2]]``."""

    @field_validator("root")
    @classmethod
    def blocks_cover_prefix(cls, blocks: list[list[int]]) -> list[list[int]]:
        points = sorted(point for block in blocks for point in block)
        if points != list(range(1, len(points) + 1)) or not all(blocks):
            raise ValueError("blocks must be non-empty and cover 1..m exactly once")
        return blocks

    @classmethod
    def from_partition(cls, partition: SetPartition) -> SetPartitionPayload:
        return cls(partition.to_json())

    def to_partition(self) -> SetPartition:
        return SetPartition.from_blocks(self.root)


class BasisMatrixPayload(BaseSchema):
    """``{"n":2,"k":2,"l":1,"blocks":[[1,2,3]],"shape":[2,4],"entries":[[0,0],[1,3]]}``."""

    n: int = Field(..., ge=1)
    k: int = Field(..., ge=0)
    l: int = Field(..., ge=0)  # noqa: E741
    blocks: list[list[int]] = Field(..., description="Source set partition")
    shape: tuple[int, int]
    entries: list[tuple[int, int]] = Field(..., description="Zero-based (row, col)")

    @classmethod
    def from_matrix(cls, matrix: BasisMatrix) -> BasisMatrixPayload:
        blocks = matrix.source_partition.to_json() if matrix.source_partition else []
        return cls(
            n=matrix.n,
            k=matrix.k,
            l=matrix.l,
            blocks=blocks,
            shape=matrix.shape,
            entries=[list(e) for e in matrix.entries],
        )

    def to_matrix(self) -> BasisMatrix:
        return BasisMatrix(
            shape=self.shape,
            entries=tuple(tuple(e) for e in self.entries),
            n=self.n,
            k=self.k,
            l=self.l,
            source_partition=SetPartition.from_blocks(self.blocks, m=self.l + self.k),
        )


class ProductBasisPayload(BaseSchema):
    spec: str
    components: list[list[list[int]]]
    shape: tuple[int, int]
    entries: list[tuple[int, int]]

    @classmethod
    def from_matrix(cls, matrix: ProductBasisMatrix, spec: str) -> ProductBasisPayload:
        components = (
            [p.to_json() for p in matrix.source.partitions] if matrix.source else []
        )
        return cls(
            spec=spec,
            components=components,
            shape=matrix.shape,
            entries=[list(e) for e in matrix.entries],
        )


class TermPayload(BaseSchema):
    blocks: list[list[int]]
    coeff: str = Field(..., description="Exact coefficient as a decimal or p/q string")

    @field_validator("coeff")
    @classmethod
    def parse_exact(cls, value: str) -> str:
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
        return value


class AlgebraElementPayload(BaseSchema):
    """``{"k": k, "basis": "diagram"|"orbit", "terms": [...]}``; ``l`` only if ``l != k``."""

    k: int = Field(..., ge=0)
    l: int | None = Field(None, ge=0)  # noqa: E741
    basis: Literal["diagram", "orbit"]
    terms: list[TermPayload]

    @classmethod
    def from_element(cls, element: AlgebraElement) -> AlgebraElementPayload:
        return cls(
            k=element.split.k,
            l=None if element.split.is_square else element.split.l,
            basis=str(element.kind),
            terms=[
                TermPayload(blocks=p.to_json(), coeff=str(c))
                for p, c in element.terms.items()
            ],
        )

    def to_element(self) -> AlgebraElement:
        split = ShapeSplit(self.k if self.l is None else self.l, self.k)
        return AlgebraElement.from_terms(
            split,
            BasisKind(self.basis),
            [
                (SetPartition.from_blocks(t.blocks, m=split.m), Fraction(t.coeff))
                for t in self.terms
            ],
        )


class BratteliLevelPayload(BaseSchema):
    """``{"level": k, "counts": {"(5,1)": 2, ...}}``."""

    level: int | float
    counts: dict[str, int]

    @classmethod
    def from_level(cls, level: BratteliLevel) -> BratteliLevelPayload:
        value: int | float = (
            int(level.level) if level.level.denominator == 1 else float(level.level)
        )
        return cls(
            level=value,
            counts={lam.label: count for lam, count in level.counts.items()},
        )


class PatternMatrixPayload(BaseSchema):
    shape: tuple[int, int]
    classes: int = Field(..., ge=1)
    cells: list[list[int]]

    @classmethod
    def from_pattern(cls, pattern: PatternMatrix) -> PatternMatrixPayload:
        return cls(
            shape=pattern.shape,
            classes=pattern.class_count,
            cells=[list(row) for row in pattern.cells],
        )


class FixtureSource(BaseSchema):
    """How to regenerate a fixture: a single group ``(n, k, l)`` or a spec."""

    kind: Literal["weight", "bias", "product"]
    n: int | None = None
    k: int | None = None
    l: int | None = None  # noqa: E741
    spec: str | None = None


class AppendixFixture(BaseSchema):
    name: str
    description: str
    source: FixtureSource
    shape: tuple[int, int]
    classes: int = Field(..., ge=1)
    cells: list[list[int]] = Field(..., description="Class ids as transcribed")

    def pattern(self) -> PatternMatrix:
        return PatternMatrix(self.shape, tuple(tuple(row) for row in self.cells))


class AppendixFile(BaseSchema):
    appendix: Literal["A", "B", "C", "D", "E"]
    title: str
    provenance: str
    fixtures: list[AppendixFixture]


class CheckResult(BaseSchema):
    name: str
    passed: bool
    count: int = Field(0, ge=0, description="Items examined by the check")
    detail: dict[str, Any] | None = None


class VerificationReport(BaseSchema):
    target: str
    seed: int
    trials: int
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((check for check in self.checks if not check.passed), None)


class DimensionReport(BaseSchema):
    target: str
    restricted_bell: int
    bell: int | None = None
    kernel_dimension: int | None = None
    quiver_dimension: int | None = None
    global_dimension: int | None = None
    agree: bool = True
