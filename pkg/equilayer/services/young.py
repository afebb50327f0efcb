"""Integer partitions, Young-frame box moves and hook-length dimensions."""

from __future__ import annotations

import logging
from functools import cache
from math import factorial, prod

from equilayer.core.exceptions import InternalConsistencyError, InvalidInputError
from equilayer.models.partition import Box, IntegerPartition

logger = logging.getLogger(__name__)


def _descending(n: int, largest: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first, *rest) for rest in _descending(n - first, first))
    return out


@cache
def enumerate_partitions(n: int) -> tuple[IntegerPartition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""

    if n < 1:
        raise InvalidInputError("Partitions are enumerated for n >= 1", details={"n": n})
    partitions = tuple(IntegerPartition(parts) for parts in _descending(n, n))
    logger.debug("Enumerated partitions", extra={"n": n, "count": len(partitions)})
    return partitions


def partition_count(n: int) -> int:
    return len(enumerate_partitions(n))


def removable_boxes(lam: IntegerPartition) -> list[Box]:
    """Corners ``(i, λ_i)`` with no box below them."""

    return [
        (i, part)
        for i, part in enumerate(lam.parts, start=1)
        if lam.part(i + 1) < part
    ]


def addable_boxes(lam: IntegerPartition) -> list[Box]:
    """Slots that extend the frame to a valid frame, top row first."""

    if lam.length == 0:
        return [(1, 1)]
    boxes = [(1, lam.parts[0] + 1)]
    for i in range(2, lam.length + 1):
        if lam.part(i) < lam.part(i - 1):
            boxes.append((i, lam.part(i) + 1))
    boxes.append((lam.length + 1, 1))
    return boxes


def remove_box(lam: IntegerPartition, box: Box) -> IntegerPartition:
    if box not in removable_boxes(lam):
        raise InvalidInputError(
            f"Box {box} is not removable from {lam}", details={"box": list(box)}
        )
    row = box[0]
    parts = list(lam.parts)
    parts[row - 1] -= 1
    return IntegerPartition(tuple(p for p in parts if p))


def add_box(lam: IntegerPartition, box: Box) -> IntegerPartition:
    if box not in addable_boxes(lam):
        raise InvalidInputError(
            f"Box {box} is not addable to {lam}", details={"box": list(box)}
        )
    row = box[0]
    parts = list(lam.parts)
    if row > len(parts):
        parts.append(1)
    else:
        parts[row - 1] += 1
    return IntegerPartition(tuple(parts))


@cache
def restrict(lam: IntegerPartition) -> tuple[IntegerPartition, ...]:
    """Partitions of ``n - 1`` reached by removing one box."""

    return tuple(remove_box(lam, box) for box in removable_boxes(lam))


@cache
def induce(mu: IntegerPartition) -> tuple[IntegerPartition, ...]:
    """Partitions of ``n + 1`` reached by adding one box."""

    return tuple(add_box(mu, box) for box in addable_boxes(mu))


def conjugate(lam: IntegerPartition) -> IntegerPartition:
    if lam.length == 0:
        return lam
    return IntegerPartition(
        tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1))
    )


def hook_lengths(lam: IntegerPartition) -> list[int]:
    columns = conjugate(lam)
    return [
        (part - j) + (columns.part(j) - i) + 1
        for i, part in enumerate(lam.parts, start=1)
        for j in range(1, part + 1)
    ]


@cache
def specht_dimension(lam: IntegerPartition) -> int:
    """``f^λ = n! / ∏ hooks``."""

    hooks = prod(hook_lengths(lam))
    quotient, remainder = divmod(factorial(lam.n), hooks)
    if remainder:
        raise InternalConsistencyError(
            f"Hook product of {lam} does not divide {lam.n}!",
            details={"hooks": hooks},
        )
    return quotient


@cache
def remove_add_count(lam: IntegerPartition, mu: IntegerPartition) -> int:
    """``α_{λ,μ}``: removals from ``λ`` after which adding a box gives ``μ``."""

    if lam.n != mu.n:
        raise InvalidInputError(
            "Partitions must have the same size",
            details={"lambda": lam.label, "mu": mu.label},
        )
    return sum(1 for x in restrict(lam) if mu in induce(x))
