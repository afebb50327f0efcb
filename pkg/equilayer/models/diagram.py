"""Diagram and orbit basis elements of partition vector spaces."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from equilayer.core.exceptions import InvalidInputError
from equilayer.models.set_partition import SetPartition, ShapeSplit

Coefficient = int | Fraction


class BasisKind(StrEnum):
    DIAGRAM = "diagram"
    ORBIT = "orbit"


@dataclass(frozen=True)
class Diagram:
    partition: SetPartition
    split: ShapeSplit
    kind: BasisKind = BasisKind.DIAGRAM

    def __post_init__(self) -> None:
        if self.partition.m != self.split.m:
            raise InvalidInputError(
                "Diagram partition does not match its shape",
                details={"m": self.partition.m, "l": self.split.l, "k": self.split.k},
            )


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Finite linear combination of basis elements with exact coefficients.

    Zero coefficients are pruned on construction.
    """

    split: ShapeSplit
    kind: BasisKind
    terms: Mapping[SetPartition, Coefficient]

    def __post_init__(self) -> None:
        pruned: dict[SetPartition, Coefficient] = {}
        for partition, coeff in self.terms.items():
            if partition.m != self.split.m:
                raise InvalidInputError(
                    "Term does not match the element's shape",
                    details={"term": partition.to_json(), "m": self.split.m},
                )
            if coeff:
                pruned[partition] = _normalise(coeff)
        object.__setattr__(self, "terms", pruned)

    @classmethod
    def basis(
        cls,
        partition: SetPartition,
        split: ShapeSplit,
        kind: BasisKind = BasisKind.DIAGRAM,
    ) -> AlgebraElement:
        return cls(split, kind, {partition: 1})

    @classmethod
    def from_terms(
        cls,
        split: ShapeSplit,
        kind: BasisKind,
        terms: Iterable[tuple[SetPartition, Coefficient]],
    ) -> AlgebraElement:
        """Collect repeated partitions by summing their coefficients."""

        collected: dict[SetPartition, Coefficient] = {}
        for partition, coeff in terms:
            collected[partition] = collected.get(partition, 0) + coeff
        return cls(split, kind, collected)

    @classmethod
    def zero(cls, split: ShapeSplit, kind: BasisKind) -> AlgebraElement:
        return cls(split, kind, {})

    @property
    def k(self) -> int:
        return self.split.k

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, partition: SetPartition) -> Coefficient:
        return self.terms.get(partition, 0)

    def scale(self, factor: Coefficient) -> AlgebraElement:
        return AlgebraElement(
            self.split, self.kind, {p: c * factor for p, c in self.terms.items()}
        )

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if self.split != other.split or self.kind != other.kind:
            raise InvalidInputError("Cannot add elements of different spaces")
        return AlgebraElement.from_terms(
            self.split, self.kind, [*self.terms.items(), *other.terms.items()]
        )

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.split == other.split
            and self.kind == other.kind
            and dict(self.terms) == dict(other.terms)
        )

    __hash__ = None  # type: ignore[assignment]


def _normalise(coeff: Coefficient) -> Coefficient:
    if isinstance(coeff, Fraction) and coeff.denominator == 1:
        return coeff.numerator
    return coeff
