"""Set partitions of ``[m] = {1, ..., m}`` and Hom-space shape splits."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from equilayer.core.exceptions import InvalidInputError

_BLOCK_SPLIT = re.compile(r"[|/]")


@dataclass(frozen=True, slots=True)
class ShapeSplit:
    """Top row ``1..l`` (output side), bottom row ``l+1..l+k`` (input side)."""

    l: int  # noqa: E741
    k: int

    def __post_init__(self) -> None:
        if self.l < 0 or self.k < 0:
            raise InvalidInputError(
                "Shape split sizes must be non-negative",
                details={"l": self.l, "k": self.k},
            )

    @classmethod
    def square(cls, k: int) -> ShapeSplit:
        return cls(k, k)

    @property
    def m(self) -> int:
        return self.l + self.k

    @property
    def is_square(self) -> bool:
        return self.l == self.k


@dataclass(frozen=True)
class SetPartition:
    """Blocks stored in canonical order.

    Each block is a sorted tuple and blocks are ordered by their smallest
    element. Use :meth:`from_blocks` or :meth:`from_labels` to build one
    from arbitrary input.
    """

    m: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 0:
            raise InvalidInputError("Ground set size must be non-negative")
        seen: list[int] = []
        for block in self.blocks:
            if not block:
                raise InvalidInputError("Blocks must be non-empty")
            if list(block) != sorted(set(block)):
                raise InvalidInputError(
                    "Blocks must be sorted without repeats",
                    details={"block": list(block)},
                )
            seen.extend(block)
        if sorted(seen) != list(range(1, self.m + 1)):
            raise InvalidInputError(
                f"Blocks must partition [1..{self.m}]",
                details={"blocks": [list(b) for b in self.blocks]},
            )
        mins = [block[0] for block in self.blocks]
        if mins != sorted(mins):
            raise InvalidInputError(
                "Blocks must be ordered by their smallest element",
                details={"blocks": [list(b) for b in self.blocks]},
            )

    @classmethod
    def from_blocks(
        cls, blocks: Iterable[Iterable[int]], m: int | None = None
    ) -> SetPartition:
        normalised = [tuple(sorted(set(block))) for block in blocks]
        normalised.sort(key=lambda block: block[0] if block else 0)
        size = m if m is not None else sum(len(block) for block in normalised)
        return cls(size, tuple(normalised))

    @classmethod
    def from_labels(cls, labels: Sequence[object]) -> SetPartition:
        """Kernel partition: positions share a block iff their labels are equal."""

        grouped: dict[object, list[int]] = {}
        for position, label in enumerate(labels, start=1):
            grouped.setdefault(label, []).append(position)
        # dicts keep insertion order, which is first appearance
        return cls(len(labels), tuple(tuple(block) for block in grouped.values()))

    @classmethod
    def singletons(cls, m: int) -> SetPartition:
        return cls(m, tuple((i,) for i in range(1, m + 1)))

    @classmethod
    def single_block(cls, m: int) -> SetPartition:
        return cls(m, (tuple(range(1, m + 1)),) if m else ())

    @classmethod
    def parse(cls, text: str) -> SetPartition:
        """Parse ``"{1,3|2,4}"``; blocks separated by ``|``."""

        body = text.strip().removeprefix("{").removesuffix("}").strip()
        if not body:
            return cls(0, ())
        try:
            blocks = [
                [int(x) for x in chunk.split(",") if x.strip()]
                for chunk in _BLOCK_SPLIT.split(body)
            ]
        except ValueError as exc:
            raise InvalidInputError(f"Malformed set partition: {text!r}") from exc
        return cls.from_blocks(blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """Restricted growth string: position i carries its 1-based block index."""

        out = [0] * self.m
        for index, block in enumerate(self.blocks, start=1):
            for element in block:
                out[element - 1] = index
        return tuple(out)

    def to_json(self) -> list[list[int]]:
        return [list(block) for block in self.blocks]

    def __str__(self) -> str:
        return "{" + " | ".join(", ".join(map(str, b)) for b in self.blocks) + "}"
