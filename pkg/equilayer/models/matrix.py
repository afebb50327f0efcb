"""Sparse 0/1 matrices: weight-sharing classes of equivariant layers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from equilayer.core.config import settings
from equilayer.core.exceptions import InvalidInputError, ensure_within_cap
from equilayer.models.set_partition import SetPartition, ShapeSplit

Entry = tuple[int, int]


@dataclass(frozen=True)
class SparseBinaryMatrix:
    """Matrix with value 1 at each listed ``(row, col)`` and 0 elsewhere.

    Entries are zero-based flat indices kept sorted and distinct.
    """

    shape: tuple[int, int]
    entries: tuple[Entry, ...]

    def __post_init__(self) -> None:
        rows, cols = self.shape
        ordered = tuple(sorted(set(self.entries)))
        if len(ordered) != len(self.entries):
            raise InvalidInputError("Matrix entries must be distinct")
        for r, c in ordered:
            if not (0 <= r < rows and 0 <= c < cols):
                raise InvalidInputError(
                    "Matrix entry outside shape",
                    details={"entry": [r, c], "shape": [rows, cols]},
                )
        object.__setattr__(self, "entries", ordered)

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    @property
    def entry_count(self) -> int:
        return len(self.entries)

    @cached_property
    def support(self) -> frozenset[Entry]:
        return frozenset(self.entries)

    def __contains__(self, entry: object) -> bool:
        return entry in self.support

    def to_dense(self, *, force: bool = False) -> np.ndarray:
        """Exact integer array; refused above the configured entry cap."""

        rows, cols = self.shape
        ensure_within_cap(
            "Dense matrix", rows * cols, settings.max_matrix_entries, force=force
        )
        dense = np.zeros(self.shape, dtype=np.int64)
        if self.entries:
            r, c = zip(*self.entries, strict=True)
            dense[list(r), list(c)] = 1
        return dense


@dataclass(frozen=True)
class BasisMatrix(SparseBinaryMatrix):
    """``X_π``: the indicator of one orbit in ``Hom(M_n^{⊗k}, M_n^{⊗l})``."""

    n: int = 1
    k: int = 0
    l: int = 0  # noqa: E741
    source_partition: SetPartition | None = None

    @property
    def split(self) -> ShapeSplit:
        return ShapeSplit(self.l, self.k)


@dataclass(frozen=True)
class FeatureBasisMatrix(SparseBinaryMatrix):
    """``X_π ⊗ E_{i,j}`` acting on feature-carrying tensors."""

    base: BasisMatrix | None = None
    feature_row: int = 1
    feature_col: int = 1
