"""McKay quiver and tensor-power multiplicity values."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from equilayer.models.partition import IntegerPartition


@dataclass(frozen=True)
class McKayQuiver:
    """Nodes are the partitions of ``n`` in reverse-lexicographic order."""

    n: int
    nodes: tuple[IntegerPartition, ...]
    adjacency: tuple[tuple[int, ...], ...]
    index: Mapping[IntegerPartition, int] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "index", {node: i for i, node in enumerate(self.nodes)}
        )

    def matrix(self) -> np.ndarray:
        """Adjacency as an exact (object dtype) numpy array."""

        return np.array(self.adjacency, dtype=object)

    def edge_count(self, source: IntegerPartition, target: IntegerPartition) -> int:
        return self.adjacency[self.index[source]][self.index[target]]

    def to_csv(self, separator: str = ";") -> str:
        header = separator.join(["", *(node.label for node in self.nodes)])
        rows = [
            separator.join([node.label, *(str(v) for v in row)])
            for node, row in zip(self.nodes, self.adjacency, strict=True)
        ]
        return "\n".join([header, *rows])


@dataclass(frozen=True)
class MultiplicityVector:
    """Counts ``m_k^λ`` at one level; absent partitions have count zero."""

    n: int
    level: int
    counts: Mapping[IntegerPartition, int]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "counts", {lam: c for lam, c in self.counts.items() if c}
        )

    def __getitem__(self, lam: IntegerPartition) -> int:
        return self.counts.get(lam, 0)

    @property
    def support(self) -> frozenset[IntegerPartition]:
        return frozenset(self.counts)


@dataclass(frozen=True)
class BratteliLevel:
    """One row of the restriction-induction Bratteli diagram.

    Integer levels hold partitions of ``n``; half-integer levels hold
    partitions of ``n - 1``.
    """

    level: Fraction
    size: int
    counts: Mapping[IntegerPartition, int]

    @property
    def is_half(self) -> bool:
        return self.level.denominator == 2
