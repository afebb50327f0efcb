"""Weight-sharing templates: a dense grid of parameter class ids."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from equilayer.core.exceptions import InvalidInputError


@dataclass(frozen=True)
class PatternMatrix:
    shape: tuple[int, int]
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows, cols = self.shape
        cells = tuple(tuple(int(v) for v in row) for row in self.cells)
        if len(cells) != rows or any(len(row) != cols for row in cells):
            raise InvalidInputError(
                "Pattern cells do not match the declared shape",
                details={"shape": [rows, cols]},
            )
        if any(v < 1 for row in cells for v in row):
            raise InvalidInputError("Pattern class ids must be positive")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> PatternMatrix:
        width = len(rows[0]) if rows else 0
        return cls((len(rows), width), tuple(tuple(row) for row in rows))

    @property
    def class_count(self) -> int:
        return len({v for row in self.cells for v in row})

    def canonical(self) -> PatternMatrix:
        """Relabel classes 1, 2, ... in order of first row-major occurrence."""

        mapping: dict[int, int] = {}
        for row in self.cells:
            for v in row:
                mapping.setdefault(v, len(mapping) + 1)
        return self.relabel(mapping)

    def relabel(self, mapping: Mapping[int, int]) -> PatternMatrix:
        return PatternMatrix(
            self.shape, tuple(tuple(mapping[v] for v in row) for row in self.cells)
        )

    def transpose(self) -> PatternMatrix:
        rows, cols = self.shape
        return PatternMatrix((cols, rows), tuple(zip(*self.cells, strict=True)))

    def first_difference(self, other: PatternMatrix) -> tuple[int, int] | None:
        """Zero-based coordinates of the first differing cell, row-major."""

        if self.shape != other.shape:
            return (0, 0)
        for r, (mine, theirs) in enumerate(zip(self.cells, other.cells, strict=True)):
            for c, (a, b) in enumerate(zip(mine, theirs, strict=True)):
                if a != b:
                    return (r, c)
        return None

    def render(self) -> str:
        width = len(str(max((v for row in self.cells for v in row), default=0)))
        return "\n".join(" ".join(f"{v:>{width}}" for v in row) for row in self.cells)
