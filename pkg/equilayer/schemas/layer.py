"""Layer descriptions for single and product symmetric groups."""

from __future__ import annotations

import re

from pydantic import Field, ValidationError, field_validator

from equilayer.core.exceptions import InvalidInputError
from equilayer.models.set_partition import ShapeSplit
from equilayer.schemas.common import FrozenSchema

_FACTOR_PATTERN = re.compile(
    r"^(?P<feature>f\s*)?(?P<n>\d+)\s*:\s*(?P<k>\d+)\s*->\s*(?P<l>\d+)$"
)


class FactorSpec(FrozenSchema):
    """``n:k->l``: ``S_n`` acting on ``M_n^{⊗k}`` in and ``M_n^{⊗l}`` out.

    Feature factors (``d:p->q``) permute feature channels of the preceding
    data factor and are treated as ordinary factors with ``n = d``.
    """

    n: int = Field(..., ge=1, description="Symmetric group degree")
    k: int = Field(..., ge=0, description="Input tensor order")
    l: int = Field(..., ge=0, description="Output tensor order")  # noqa: E741
    feature: bool = Field(False, description="Permutes features, not data")

    @property
    def split(self) -> ShapeSplit:
        return ShapeSplit(self.l, self.k)

    @property
    def m(self) -> int:
        return self.l + self.k

    @property
    def rows(self) -> int:
        return self.n**self.l

    @property
    def cols(self) -> int:
        return self.n**self.k

    def __str__(self) -> str:
        prefix = "f " if self.feature else ""
        return f"{prefix}{self.n}:{self.k}->{self.l}"


class LayerSpec(FrozenSchema):
    """Ordered factors; order fixes Kronecker significance (leftmost first)."""

    factors: tuple[FactorSpec, ...] = Field(..., min_length=1)

    @field_validator("factors")
    @classmethod
    def feature_follows_data(
        cls, factors: tuple[FactorSpec, ...]
    ) -> tuple[FactorSpec, ...]:
        if factors[0].feature:
            raise ValueError("a feature factor must follow a data factor")
        return factors

    @classmethod
    def single(cls, n: int, k: int, l: int) -> LayerSpec:  # noqa: E741
        return cls(factors=(FactorSpec(n=n, k=k, l=l),))

    @classmethod
    def parse(cls, text: str) -> LayerSpec:
        """Parse ``"2:2->1,4:1->1"``; prefix ``f`` marks a feature factor."""

        factors = []
        for chunk in text.split(","):
            match = _FACTOR_PATTERN.match(chunk.strip())
            if match is None:
                raise InvalidInputError(
                    f"Malformed factor {chunk.strip()!r}; expected 'n:k->l' or 'f d:p->q'",
                    details={"spec": text},
                )
            factors.append(
                {
                    "n": int(match["n"]),
                    "k": int(match["k"]),
                    "l": int(match["l"]),
                    "feature": match["feature"] is not None,
                }
            )
        try:
            return cls.model_validate({"factors": factors})
        except ValidationError as exc:
            raise InvalidInputError(
                f"Invalid layer spec {text!r}",
                details={
                    "errors": exc.errors(
                        include_url=False, include_context=False, include_input=False
                    )
                },
            ) from exc

    @property
    def rows(self) -> int:
        out = 1
        for factor in self.factors:
            out *= factor.rows
        return out

    @property
    def cols(self) -> int:
        out = 1
        for factor in self.factors:
            out *= factor.cols
        return out

    @property
    def total_n(self) -> int:
        return sum(f.n for f in self.factors)

    @property
    def total_split(self) -> ShapeSplit:
        return ShapeSplit(sum(f.l for f in self.factors), sum(f.k for f in self.factors))

    def __str__(self) -> str:
        return ",".join(str(f) for f in self.factors)
