"""Weight-sharing templates built from a basis and compared up to relabelling."""

from __future__ import annotations

from collections.abc import Sequence

from equilayer.core.exceptions import InternalConsistencyError, InvalidInputError
from equilayer.models.matrix import SparseBinaryMatrix
from equilayer.models.pattern import PatternMatrix


def pattern_from_basis(basis: Sequence[SparseBinaryMatrix]) -> PatternMatrix:
    """Cell value ``i`` marks the ``i``-th basis matrix (1-based).

    The basis must tile its grid: every cell covered exactly once.
    """

    if not basis:
        raise InvalidInputError("Cannot build a pattern from an empty basis")
    shape = basis[0].shape
    rows, cols = shape
    grid = [[0] * cols for _ in range(rows)]
    for class_id, matrix in enumerate(basis, start=1):
        if matrix.shape != shape:
            raise InvalidInputError("Basis matrices disagree on shape")
        for r, c in matrix.entries:
            if grid[r][c]:
                raise InternalConsistencyError(
                    "Basis supports overlap",
                    details={"cell": [r, c], "classes": [grid[r][c], class_id]},
                )
            grid[r][c] = class_id
    for r, row in enumerate(grid):
        for c, value in enumerate(row):
            if not value:
                raise InternalConsistencyError(
                    "Basis supports leave a cell uncovered", details={"cell": [r, c]}
                )
    return PatternMatrix.from_rows(grid)


def canonical_pattern(basis: Sequence[SparseBinaryMatrix]) -> PatternMatrix:
    return pattern_from_basis(basis).canonical()


def patterns_match(
    left: PatternMatrix, right: PatternMatrix
) -> tuple[bool, tuple[int, int] | None]:
    """Compare after canonical relabelling; return the first differing cell."""

    difference = left.canonical().first_difference(right.canonical())
    return difference is None, difference
