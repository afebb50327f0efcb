"""Partition algebra: diagram composition and the diagram/orbit basis change."""

from __future__ import annotations

import logging
import threading
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache

from equilayer.core.config import settings
from equilayer.core.exceptions import ShapeMismatchError, SizeCapExceededError
from equilayer.models.diagram import AlgebraElement, BasisKind, Coefficient, Diagram
from equilayer.models.set_partition import SetPartition, ShapeSplit
from equilayer.services.setpart import (
    coarsenings,
    enumerate_set_partitions,
    refinements,
)
from equilayer.utils.union_find import UnionFind

logger = logging.getLogger(__name__)


def identity_partition(k: int) -> SetPartition:
    """``{1, k+1 | 2, k+2 | ... | k, 2k}``."""

    return SetPartition(2 * k, tuple((i, k + i) for i in range(1, k + 1)))


def identity_element(k: int) -> AlgebraElement:
    return AlgebraElement.basis(identity_partition(k), ShapeSplit.square(k))


@cache
def _compose_partitions(
    top: SetPartition, bottom: SetPartition, k: int
) -> tuple[int, SetPartition]:
    # vertices: 0..k-1 top row, k..2k-1 shared middle, 2k..3k-1 bottom row
    uf = UnionFind(3 * k)
    for block in top.blocks:
        first = block[0] - 1
        for x in block[1:]:
            uf.union(first, x - 1)
    for block in bottom.blocks:
        first = block[0] - 1 + k
        for x in block[1:]:
            uf.union(first, x - 1 + k)

    outer_roots = {uf.find(v) for v in (*range(k), *range(2 * k, 3 * k))}
    middle_only = {uf.find(v) for v in range(k, 2 * k)} - outer_roots
    composed = SetPartition.from_labels(
        [uf.find(v) for v in (*range(k), *range(2 * k, 3 * k))]
    )
    return len(middle_only), composed


def _require_square_diagrams(*items: Diagram | AlgebraElement) -> int:
    ks = set()
    for item in items:
        if item.kind != BasisKind.DIAGRAM:
            raise ShapeMismatchError(
                "Composition is defined on the diagram basis only",
                details={"basis": str(item.kind)},
            )
        if not item.split.is_square:
            raise ShapeMismatchError(
                "Composition needs square diagrams (l = k)",
                details={"l": item.split.l, "k": item.split.k},
            )
        ks.add(item.split.k)
    if len(ks) != 1:
        raise ShapeMismatchError("Diagrams must share k", details={"k": sorted(ks)})
    return ks.pop()


def compose(d1: Diagram, d2: Diagram, n: int) -> tuple[int, Diagram]:
    """Stack ``d1`` over ``d2``; return ``(n**c, d1 ∘ d2)``.

    ``c`` counts the components left entirely inside the middle row.
    """

    k = _require_square_diagrams(d1, d2)
    removed, composed = _compose_partitions(d1.partition, d2.partition, k)
    return n**removed, Diagram(composed, ShapeSplit.square(k))


def compose_exponent(d1: Diagram, d2: Diagram) -> int:
    """Number of middle-row components removed when composing."""

    k = _require_square_diagrams(d1, d2)
    return _compose_partitions(d1.partition, d2.partition, k)[0]


def algebra_product(a1: AlgebraElement, a2: AlgebraElement, n: int) -> AlgebraElement:
    """Bilinear extension of :func:`compose`."""

    k = _require_square_diagrams(a1, a2)
    terms: list[tuple[SetPartition, Coefficient]] = []
    for p1, c1 in a1.terms.items():
        for p2, c2 in a2.terms.items():
            removed, composed = _compose_partitions(p1, p2, k)
            terms.append((composed, c1 * c2 * n**removed))
    return AlgebraElement.from_terms(a1.split, BasisKind.DIAGRAM, terms)


def _check_transition_cap(m: int) -> None:
    cap = settings.transition_max_m
    if m > cap:
        raise SizeCapExceededError(
            f"Basis transition on {m} vertices exceeds the cap of {cap}",
            required=m,
            cap=cap,
        )


def transition_to_orbit(a: AlgebraElement) -> AlgebraElement:
    """``d_π = Σ_{π ⪯ θ} x_θ``."""

    if a.kind == BasisKind.ORBIT:
        return a
    _check_transition_cap(a.split.m)
    terms = (
        (theta, coeff)
        for partition, coeff in a.terms.items()
        for theta in coarsenings(partition)
    )
    return AlgebraElement.from_terms(a.split, BasisKind.ORBIT, terms)


def transition_to_diagram(a: AlgebraElement) -> AlgebraElement:
    """Inverse of :func:`transition_to_orbit` by triangular back-substitution.

    Solves ``y_θ = Σ_{π ⪯ θ} x_π`` for ``x`` starting from the finest
    partitions; only the upper set of the input's support can be non-zero.
    """

    if a.kind == BasisKind.DIAGRAM:
        return a
    _check_transition_cap(a.split.m)
    upper: set[SetPartition] = set()
    for partition in a.terms:
        upper.update(coarsenings(partition))
    solved: dict[SetPartition, Coefficient] = {}
    for theta in sorted(upper, key=lambda p: -p.block_count):
        value = a.coefficient(theta)
        for finer in refinements(theta):
            if finer != theta:
                value -= solved.get(finer, 0)
        solved[theta] = value
    return AlgebraElement(a.split, BasisKind.DIAGRAM, solved)


@dataclass(frozen=True)
class TransitionMatrix:
    """Zeta matrix of the refinement order on partitions of ``[m]``.

    Rows index the orbit basis, columns the diagram basis, both in
    block-count-ascending order (ties in enumeration order). Column ``j``
    lists the rows ``i`` with ``order[j] ⪯ order[i]``.
    """

    m: int
    order: tuple[SetPartition, ...]
    columns: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.order)

    def entry(self, row: int, col: int) -> int:
        return 1 if row in self.columns[col] else 0

    def is_upper_unitriangular(self) -> bool:
        return all(
            j in rows and all(i <= j for i in rows)
            for j, rows in enumerate(self.columns)
        )

    def nonzero_count(self) -> int:
        return sum(len(rows) for rows in self.columns)


_TRANSITION_CACHE: dict[int, TransitionMatrix] = {}
_TRANSITION_LOCK = threading.Lock()


def transition_matrix(m: int) -> TransitionMatrix:
    """Memoized zeta matrix for ``[m]``; safe for concurrent callers."""

    _check_transition_cap(m)
    with _TRANSITION_LOCK:
        cached = _TRANSITION_CACHE.get(m)
    if cached is not None:
        return cached

    order = _block_count_order(enumerate_set_partitions(m))
    position = {p: i for i, p in enumerate(order)}
    columns = tuple(
        tuple(sorted(position[theta] for theta in coarsenings(p))) for p in order
    )
    built = TransitionMatrix(m=m, order=order, columns=columns)
    logger.debug(
        "Built transition matrix",
        extra={"m": m, "size": built.size, "nonzero": built.nonzero_count()},
    )
    with _TRANSITION_LOCK:
        return _TRANSITION_CACHE.setdefault(m, built)


def _block_count_order(partitions: Sequence[SetPartition]) -> tuple[SetPartition, ...]:
    return tuple(sorted(partitions, key=lambda p: p.block_count))
