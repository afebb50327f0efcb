"""Set partitions of [m]: enumeration, counting and the refinement order."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from functools import cache

from equilayer.core.exceptions import InvalidInputError
from equilayer.models.set_partition import SetPartition, ShapeSplit

logger = logging.getLogger(__name__)


def restricted_growth_strings(m: int, max_blocks: int | None = None) -> Iterator[list[int]]:
    """Zero-based restricted growth strings of length ``m`` in lex order.

    ``a[0] = 0`` and ``a[i] <= max(a[:i]) + 1``; the value bound ``max_blocks``
    caps the number of distinct values.
    """

    if m == 0:
        yield []
        return
    limit = m if max_blocks is None else min(m, max_blocks)
    a = [0] * m
    peak = [0] * m  # peak[i] = max(a[:i+1])
    while True:
        yield list(a)
        # rightmost position that can still be incremented
        i = m - 1
        while i > 0 and (a[i] > peak[i - 1] or a[i] + 1 >= limit):
            i -= 1
        if i == 0:
            return
        a[i] += 1
        peak[i] = max(peak[i - 1], a[i])
        for j in range(i + 1, m):
            a[j] = 0
            peak[j] = peak[i]


@cache
def enumerate_set_partitions(
    m: int, max_blocks: int | None = None
) -> tuple[SetPartition, ...]:
    """Set partitions of ``[m]`` with at most ``max_blocks`` blocks.

    The order is lexicographic on restricted growth strings and is the
    parameter numbering used everywhere downstream. ``m = 0`` yields the
    single empty partition.
    """

    if m < 0:
        raise InvalidInputError("Ground set size must be non-negative", details={"m": m})
    if max_blocks is not None and max_blocks < 1:
        raise InvalidInputError(
            "max_blocks must be positive", details={"max_blocks": max_blocks}
        )
    partitions = tuple(
        SetPartition.from_labels(rgs) for rgs in restricted_growth_strings(m, max_blocks)
    )
    logger.debug(
        "Enumerated set partitions",
        extra={"m": m, "max_blocks": max_blocks, "count": len(partitions)},
    )
    return partitions


@cache
def _stirling_row(m: int) -> tuple[int, ...]:
    row = [1]
    for size in range(1, m + 1):
        nxt = [0] * (size + 1)
        for t in range(1, size + 1):
            below = row[t] if t < len(row) else 0
            nxt[t] = t * below + row[t - 1]
        row = nxt
    return tuple(row)


def stirling2(m: int, t: int) -> int:
    if m < 0 or t < 0:
        raise InvalidInputError("stirling2 takes non-negative arguments")
    row = _stirling_row(m)
    return row[t] if t < len(row) else 0


def bell(m: int) -> int:
    if m < 0:
        raise InvalidInputError("bell takes a non-negative argument")
    return sum(_stirling_row(m))


def restricted_bell(m: int, n: int) -> int:
    """Set partitions of ``[m]`` with at most ``n`` blocks.

    The empty partition of ``[0]`` has zero blocks, so ``restricted_bell(0, n)``
    is 1.
    """

    if m < 0 or n < 1:
        raise InvalidInputError(
            "restricted_bell needs m >= 0 and n >= 1", details={"m": m, "n": n}
        )
    return sum(_stirling_row(m)[: n + 1])


def permutation_module_profile(m: int, n: int) -> dict[int, int]:
    """``t -> S(m, t)`` for ``t <= n``: copies of ``M^{[n-t,1^t]}`` in ``M_n^{⊗m}``."""

    return {t: stirling2(m, t) for t in range(min(m, n) + 1) if stirling2(m, t)}


def block_labelling(
    partition: SetPartition, split: ShapeSplit
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(I_π, J_π)``: block indices at the top row, then the bottom row."""

    _check_split(partition, split)
    labels = partition.labels
    return labels[: split.l], labels[split.l :]


def refines(finer: SetPartition, coarser: SetPartition) -> bool:
    """``finer ⪯ coarser``: every block of ``finer`` lies inside one of ``coarser``."""

    if finer.m != coarser.m:
        raise InvalidInputError(
            "Partitions must share a ground set",
            details={"left": finer.m, "right": coarser.m},
        )
    labels = coarser.labels
    return all(len({labels[x - 1] for x in block}) == 1 for block in finer.blocks)


def coarsenings(partition: SetPartition) -> Iterator[SetPartition]:
    """Every ``θ`` with ``partition ⪯ θ``, obtained by merging blocks."""

    blocks = partition.blocks
    for grouping in enumerate_set_partitions(len(blocks)):
        yield SetPartition.from_blocks(
            (x for index in group for x in blocks[index - 1])
            for group in grouping.blocks
        )


def refinements(partition: SetPartition) -> Iterator[SetPartition]:
    """Every ``π`` with ``π ⪯ partition``, obtained by splitting blocks."""

    per_block = [
        [
            [tuple(block[i - 1] for i in piece) for piece in local.blocks]
            for local in enumerate_set_partitions(len(block))
        ]
        for block in partition.blocks
    ]
    for choice in itertools.product(*per_block):
        yield SetPartition.from_blocks(
            (piece for pieces in choice for piece in pieces), m=partition.m
        )


def refold(partition: SetPartition, source: ShapeSplit, target: ShapeSplit) -> SetPartition:
    """Reinterpret a partition of ``P_k^l`` as one of ``P_p^q`` with ``q + p = l + k``.

    Blocks are untouched; only the split changes.
    """

    _check_split(partition, source)
    if target.m != source.m:
        raise InvalidInputError(
            "Refold target must have the same number of vertices",
            details={"from": [source.l, source.k], "to": [target.l, target.k]},
        )
    return partition


def _check_split(partition: SetPartition, split: ShapeSplit) -> None:
    if partition.m != split.m:
        raise InvalidInputError(
            "Shape split does not match the partition",
            details={"m": partition.m, "l": split.l, "k": split.k},
        )
