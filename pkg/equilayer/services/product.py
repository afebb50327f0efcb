"""Layers equivariant to ``S_{n_1} × ... × S_{n_m}``.

Feature factors are ordinary factors with ``n = d``; the parser has already
placed each one right after its data factor.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from math import prod

import numpy as np

from equilayer.core.config import settings
from equilayer.core.exceptions import (
    InvalidInputError,
    ShapeMismatchError,
    ensure_within_cap,
)
from equilayer.models.matrix import Entry, SparseBinaryMatrix
from equilayer.models.product import DiagramTuple, ProductBasisMatrix
from equilayer.models.set_partition import SetPartition, ShapeSplit
from equilayer.schemas.layer import LayerSpec
from equilayer.services.equimap import (
    EquivarianceReport,
    basis_matrix,
    decode_index,
    index_permutation,
    is_invariant,
    kernel_partition,
    random_permutations,
)
from equilayer.services.setpart import enumerate_set_partitions, restricted_bell

logger = logging.getLogger(__name__)


def product_dim(spec: LayerSpec) -> int:
    return prod(restricted_bell(f.m, f.n) for f in spec.factors)


def global_dim(spec: LayerSpec) -> int:
    """Dimension for the single group ``S_{Σ n_r}`` on the concatenated orders."""

    total = spec.total_split
    return restricted_bell(total.m, spec.total_n)


def plain_feature_dim(spec: LayerSpec, d_in: int, d_out: int) -> int:
    """Dimension with unstructured feature channels on both sides."""

    if d_in < 1 or d_out < 1:
        raise InvalidInputError("Feature dimensions must be positive")
    return d_in * d_out * product_dim(spec)


def enumerate_diagram_tuples(spec: LayerSpec) -> list[DiagramTuple]:
    """Cartesian product of per-factor partitions, rightmost factor fastest."""

    per_factor = [
        [(p, f.split) for p in enumerate_set_partitions(f.m, f.n)] for f in spec.factors
    ]
    return [DiagramTuple(tuple(combo)) for combo in itertools.product(*per_factor)]


def kronecker_entries(
    left: Sequence[Entry],
    left_shape: tuple[int, int],
    right: Sequence[Entry],
    right_shape: tuple[int, int],
) -> tuple[tuple[Entry, ...], tuple[int, int]]:
    """Sparse Kronecker product, left operand most significant."""

    rr, rc = right_shape
    entries = tuple(
        (r1 * rr + r2, c1 * rc + c2) for r1, c1 in left for r2, c2 in right
    )
    return entries, (left_shape[0] * rr, left_shape[1] * rc)


def _check_tuple(t: DiagramTuple, spec: LayerSpec) -> None:
    if len(t) != len(spec.factors):
        raise ShapeMismatchError(
            "Diagram tuple does not match the layer spec",
            details={"components": len(t), "factors": len(spec.factors)},
        )
    for (partition, split), factor in zip(t.components, spec.factors, strict=True):
        if split != factor.split or partition.m != factor.m:
            raise ShapeMismatchError(
                f"Component {partition} does not fit factor {factor}",
                details={"factor": str(factor)},
            )
        if partition.block_count > factor.n:
            raise InvalidInputError(
                f"Component {partition} has more than {factor.n} blocks",
                details={"factor": str(factor)},
            )


def product_basis_matrix(t: DiagramTuple, spec: LayerSpec) -> ProductBasisMatrix:
    _check_tuple(t, spec)
    entries: tuple[Entry, ...] = ((0, 0),)
    shape = (1, 1)
    for (partition, split), factor in zip(t.components, spec.factors, strict=True):
        factor_matrix = basis_matrix(partition, factor.n, split)
        entries, shape = kronecker_entries(
            entries, shape, factor_matrix.entries, factor_matrix.shape
        )
    return ProductBasisMatrix(shape=shape, entries=entries, source=t)


def product_basis(spec: LayerSpec, *, force: bool = False) -> list[ProductBasisMatrix]:
    ensure_within_cap(
        f"Basis for {spec}",
        spec.rows * spec.cols,
        settings.max_matrix_entries,
        force=force,
    )
    basis = [product_basis_matrix(t, spec) for t in enumerate_diagram_tuples(spec)]
    logger.debug("Generated product basis", extra={"spec": str(spec), "size": len(basis)})
    return basis


def demarcation_embed(t: DiagramTuple) -> tuple[SetPartition, ShapeSplit]:
    """Drop the factor boundaries: one partition of ``[Σ(l_r + k_r)]``.

    All top rows come first, left to right, then all bottom rows.
    """

    total_l = sum(split.l for _, split in t.components)
    total_k = sum(split.k for _, split in t.components)
    blocks: list[list[int]] = []
    top_offset = 0
    bottom_offset = total_l
    for partition, split in t.components:
        for block in partition.blocks:
            blocks.append(
                [
                    top_offset + x if x <= split.l else bottom_offset + (x - split.l)
                    for x in block
                ]
            )
        top_offset += split.l
        bottom_offset += split.k
    return SetPartition.from_blocks(blocks, m=total_l + total_k), ShapeSplit(total_l, total_k)


def _factor_sizes(spec: LayerSpec) -> tuple[list[int], list[int]]:
    return [f.rows for f in spec.factors], [f.cols for f in spec.factors]


def _mixed_radix_split(flat: int, sizes: Sequence[int]) -> list[int]:
    digits = []
    for size in reversed(sizes):
        flat, digit = divmod(flat, size)
        digits.append(digit)
    return list(reversed(digits))


def support_matches_embedding(matrix: ProductBasisMatrix, spec: LayerSpec) -> bool:
    """Every entry, read as a global index tuple, has the embedded kernel.

    Factor ``r`` indices are shifted by ``n_1 + ... + n_{r-1}`` so factors
    use disjoint values of ``[Σ n_r]``.
    """

    if matrix.source is None:
        raise InvalidInputError("Matrix carries no diagram tuple")
    embedded, _ = demarcation_embed(matrix.source)
    row_sizes, col_sizes = _factor_sizes(spec)
    offsets = list(itertools.accumulate((f.n for f in spec.factors), initial=0))
    for r, c in matrix.entries:
        top: list[int] = []
        bottom: list[int] = []
        row_parts = _mixed_radix_split(r, row_sizes)
        col_parts = _mixed_radix_split(c, col_sizes)
        for factor, offset, rp, cp in zip(
            spec.factors, offsets[:-1], row_parts, col_parts, strict=True
        ):
            top.extend(v + offset for v in decode_index(rp, factor.n, factor.l))
            bottom.extend(v + offset for v in decode_index(cp, factor.n, factor.k))
        if kernel_partition([*top, *bottom]) != embedded:
            return False
    return True


def _kron_images(tables: Sequence[Sequence[int]], sizes: Sequence[int]) -> list[int]:
    images = [0]
    for table, size in zip(tables, sizes, strict=True):
        images = [prefix * size + v for prefix in images for v in table]
    return images


def verify_product_equivariance(
    matrix: SparseBinaryMatrix | np.ndarray,
    spec: LayerSpec,
    trials: int | None = None,
    seed: int | None = None,
) -> EquivarianceReport:
    """Check ``(⊗ ρ_{l_r}(σ_r)) M = M (⊗ ρ_{k_r}(σ_r))`` for sampled ``σ_r``.

    Each trial draws an independent permutation per factor; the first trials
    move one factor at a time by its adjacent transposition.
    """

    expected = (spec.rows, spec.cols)
    shape = matrix.shape if isinstance(matrix, SparseBinaryMatrix) else np.shape(matrix)
    if tuple(shape) != expected:
        raise ShapeMismatchError(
            f"Matrix shape {tuple(shape)} is not {expected}",
            details={"expected": list(expected)},
        )
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    row_sizes, col_sizes = _factor_sizes(spec)

    candidates: list[tuple[tuple[int, ...], ...]] = []
    identity = [tuple(range(1, f.n + 1)) for f in spec.factors]
    for r, factor in enumerate(spec.factors):
        for i in range(1, factor.n):
            moved = list(identity)
            sigma = list(identity[r])
            sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
            moved[r] = tuple(sigma)
            candidates.append(tuple(moved))
        if factor.n > 2:
            moved = list(identity)
            moved[r] = (*range(2, factor.n + 1), 1)
            candidates.append(tuple(moved))
    streams = [
        random_permutations(f.n, trials, seed + index)
        for index, f in enumerate(spec.factors)
    ]
    candidates.extend(zip(*streams, strict=True))

    for checked, sigmas in enumerate(candidates, start=1):
        rows = _kron_images(
            [index_permutation(s, f.n, f.l) for s, f in zip(sigmas, spec.factors, strict=True)],
            row_sizes,
        )
        cols = _kron_images(
            [index_permutation(s, f.n, f.k) for s, f in zip(sigmas, spec.factors, strict=True)],
            col_sizes,
        )
        if not is_invariant(matrix, rows, cols):
            return EquivarianceReport(False, checked, sigmas)
    return EquivarianceReport(True, len(candidates))
