"""Integer partitions, the labels of irreducible representations of S_n."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby

from equilayer.core.exceptions import InvalidInputError

Box = tuple[int, int]

_PART_PATTERN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True, slots=True)
class IntegerPartition:
    """A weakly decreasing tuple of positive parts.

    Boxes of the Young frame use 1-based ``(row, column)`` coordinates with
    rows increasing downward.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise InvalidInputError(
                "Partition parts must be positive", details={"parts": list(parts)}
            )
        if any(a < b for a, b in zip(parts, parts[1:], strict=False)):
            raise InvalidInputError(
                "Partition parts must be weakly decreasing",
                details={"parts": list(parts)},
            )

    @classmethod
    def of(cls, *parts: int) -> IntegerPartition:
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> IntegerPartition:
        """Parse ``"(4,1^2)"``, ``"(4,1,1)"`` or ``"4,1,1"``."""

        body = text.strip().removeprefix("(").removesuffix(")").replace(" ", "")
        if not body:
            raise InvalidInputError(f"Empty partition: {text!r}")
        parts: list[int] = []
        for token in body.split(","):
            match = _PART_PATTERN.match(token)
            if match is None:
                raise InvalidInputError(f"Malformed partition: {text!r}")
            part, exponent = int(match.group(1)), int(match.group(2) or 1)
            parts.extend([part] * exponent)
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, row: int) -> int:
        """Length of 1-based ``row``; zero below the last row."""

        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    @property
    def label(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @property
    def power_label(self) -> str:
        """Display form with repeated parts as exponents, e.g. ``(4,1^2)``."""

        chunks = []
        for part, run in groupby(self.parts):
            count = len(list(run))
            chunks.append(str(part) if count == 1 else f"{part}^{count}")
        return "(" + ",".join(chunks) + ")"

    def __str__(self) -> str:
        return self.label
