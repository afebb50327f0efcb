"""McKay quiver of the permutation representation and walk-count dimensions."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterator, Mapping
from fractions import Fraction
from functools import cache

import numpy as np

from equilayer.core.exceptions import InvalidInputError
from equilayer.models.partition import IntegerPartition
from equilayer.models.quiver import BratteliLevel, McKayQuiver, MultiplicityVector
from equilayer.services.young import (
    enumerate_partitions,
    induce,
    remove_add_count,
    restrict,
)

logger = logging.getLogger(__name__)


def _require_n(n: int) -> None:
    if n < 2:
        raise InvalidInputError(
            "The McKay quiver of M_n needs n >= 2", details={"n": n}
        )


def _require_level(k: int) -> None:
    if k < 0:
        raise InvalidInputError("Tensor power must be non-negative", details={"k": k})


@cache
def build_quiver(n: int) -> McKayQuiver:
    """Adjacency ``α_{λ,μ}`` over all partitions of ``n``."""

    _require_n(n)
    nodes = enumerate_partitions(n)
    adjacency = tuple(
        tuple(remove_add_count(lam, mu) for mu in nodes) for lam in nodes
    )
    logger.debug("Built McKay quiver", extra={"n": n, "nodes": len(nodes)})
    return McKayQuiver(n=n, nodes=nodes, adjacency=adjacency)


def _indicator(q: McKayQuiver, node: IntegerPartition) -> np.ndarray:
    vector = np.zeros(len(q.nodes), dtype=object)
    vector[q.index[node]] = 1
    return vector


def _walk(q: McKayQuiver, start: np.ndarray, steps: int) -> np.ndarray:
    matrix = q.matrix()
    vector = start
    for _ in range(steps):
        vector = vector.dot(matrix)
    return vector


def multiplicities_via_power(q: McKayQuiver, k: int) -> MultiplicityVector:
    """Row ``[n]`` of ``A^k`` by ``k`` exact vector-matrix products."""

    _require_level(k)
    trivial = q.nodes[0]
    vector = _walk(q, _indicator(q, trivial), k)
    counts = {node: int(vector[i]) for i, node in enumerate(q.nodes)}
    return MultiplicityVector(n=q.n, level=k, counts=counts)


def walk_count(
    q: McKayQuiver, source: IntegerPartition, target: IntegerPartition, length: int
) -> int:
    """Walks of ``length`` steps from ``source`` to ``target``."""

    _require_level(length)
    for node in (source, target):
        if node not in q.index:
            raise InvalidInputError(
                f"{node} is not a partition of {q.n}", details={"node": node.label}
            )
    vector = _walk(q, _indicator(q, source), length)
    return int(vector[q.index[target]])


def _restrict_counts(counts: Mapping[IntegerPartition, int]) -> Counter[IntegerPartition]:
    out: Counter[IntegerPartition] = Counter()
    for lam, count in counts.items():
        for mu in restrict(lam):
            out[mu] += count
    return out


def _induce_counts(counts: Mapping[IntegerPartition, int]) -> Counter[IntegerPartition]:
    out: Counter[IntegerPartition] = Counter()
    for mu, count in counts.items():
        for nu in induce(mu):
            out[nu] += count
    return out


def bratteli_levels(n: int, k: int) -> Iterator[BratteliLevel]:
    """Levels ``0, 1/2, 1, ..., k`` of the restriction-induction diagram.

    Only the current row is held; levels are produced on demand.
    """

    _require_n(n)
    _require_level(k)
    counts: Mapping[IntegerPartition, int] = {IntegerPartition((n,)): 1}
    yield BratteliLevel(level=Fraction(0), size=n, counts=dict(counts))
    for step in range(k):
        half = _restrict_counts(counts)
        yield BratteliLevel(level=Fraction(2 * step + 1, 2), size=n - 1, counts=dict(half))
        counts = _induce_counts(half)
        yield BratteliLevel(level=Fraction(step + 1), size=n, counts=dict(counts))


def multiplicities_via_bratteli(n: int, k: int) -> MultiplicityVector:
    *_, last = bratteli_levels(n, k)
    return MultiplicityVector(n=n, level=k, counts=last.counts)


def _multiplicities(n: int, k: int) -> MultiplicityVector:
    return multiplicities_via_power(build_quiver(n), k)


def end_dim(n: int, k: int) -> int:
    """``dim End_{S_n}(M_n^{⊗k}) = Σ (m_k^λ)²``."""

    return sum(c * c for c in _multiplicities(n, k).counts.values())


def hom_dim(n: int, k: int, l: int) -> int:  # noqa: E741
    """``dim Hom_{S_n}(M_n^{⊗k}, M_n^{⊗l}) = Σ m_k^λ m_l^λ``."""

    _require_level(l)
    source = _multiplicities(n, k)
    target = _multiplicities(n, l)
    return sum(c * target[lam] for lam, c in source.counts.items())


def invariant_dim(n: int, k: int) -> int:
    """Closed walks of length ``k`` at ``[n]``."""

    return hom_dim(n, k, 0)
