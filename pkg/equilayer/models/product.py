"""Values for layers equivariant to products of symmetric groups."""

from __future__ import annotations

from dataclasses import dataclass

from equilayer.models.matrix import SparseBinaryMatrix
from equilayer.models.set_partition import SetPartition, ShapeSplit


@dataclass(frozen=True)
class DiagramTuple:
    """One orbit basis diagram per factor, placed side by side."""

    components: tuple[tuple[SetPartition, ShapeSplit], ...]

    @property
    def partitions(self) -> tuple[SetPartition, ...]:
        return tuple(partition for partition, _ in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return " × ".join(str(partition) for partition, _ in self.components)


@dataclass(frozen=True)
class ProductBasisMatrix(SparseBinaryMatrix):
    """Kronecker product of per-factor orbit matrices."""

    source: DiagramTuple | None = None
