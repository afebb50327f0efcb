"""Standard bases of ``Hom_{S_n}(M_n^{⊗k}, M_n^{⊗l})``.

Index tuples ``(I, J)`` carry the output multi-index ``I`` (length ``l``)
followed by the input multi-index ``J`` (length ``k``). Coordinates are
1-based; flat indices are 0-based and row-major with the leftmost
coordinate most significant, so ``(1,1), (1,2), (2,1), (2,2)`` flatten to
``0, 1, 2, 3``.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cache
from math import perm

import numpy as np
import structlog
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from equilayer.core.config import settings
from equilayer.core.exceptions import (
    InternalConsistencyError,
    InvalidInputError,
    ShapeMismatchError,
    ensure_within_cap,
)
from equilayer.models.diagram import AlgebraElement, BasisKind
from equilayer.models.matrix import BasisMatrix, FeatureBasisMatrix, SparseBinaryMatrix
from equilayer.models.set_partition import SetPartition, ShapeSplit
from equilayer.services.diagram import transition_to_orbit
from equilayer.services.setpart import (
    bell,
    enumerate_set_partitions,
    restricted_bell,
)
from equilayer.utils.union_find import find_orbits

logger = logging.getLogger(__name__)
log = structlog.get_logger(__name__)

Permutation = tuple[int, ...]


def _require_n(n: int) -> None:
    if n < 1:
        raise InvalidInputError("n must be at least 1", details={"n": n})


def kernel_partition(t: Sequence[int]) -> SetPartition:
    """Positions share a block iff they carry equal values."""

    return SetPartition.from_labels(list(t))


def encode_index(t: Sequence[int], n: int) -> int:
    """Row-major flat index of a 1-based multi-index; ``()`` encodes to 0."""

    flat = 0
    for coordinate in t:
        if not 1 <= coordinate <= n:
            raise InvalidInputError(
                f"Coordinate {coordinate} outside 1..{n}", details={"index": list(t)}
            )
        flat = flat * n + (coordinate - 1)
    return flat


def decode_index(flat: int, n: int, m: int) -> tuple[int, ...]:
    if not 0 <= flat < n**m:
        raise InvalidInputError(
            f"Flat index {flat} outside 0..{n**m - 1}", details={"n": n, "m": m}
        )
    digits = []
    for _ in range(m):
        flat, digit = divmod(flat, n)
        digits.append(digit + 1)
    return tuple(reversed(digits))


def _weights(n: int, length: int) -> list[int]:
    return [n ** (length - 1 - i) for i in range(length)]


def basis_matrix(partition: SetPartition, n: int, split: ShapeSplit) -> BasisMatrix:
    """``X_π``: ones at every ``(I, J)`` whose kernel partition is ``π``.

    Generated from the injective maps blocks -> ``[n]``, one entry each.
    """

    _require_n(n)
    if partition.m != split.m:
        raise InvalidInputError(
            "Partition size does not match l + k",
            details={"m": partition.m, "l": split.l, "k": split.k},
        )
    t = partition.block_count
    if t > n:
        raise InvalidInputError(
            f"{partition} has {t} blocks, more than n = {n}; its image is zero",
            details={"blocks": t, "n": n},
        )
    labels = partition.labels
    row_labels, col_labels = labels[: split.l], labels[split.l :]
    row_weights, col_weights = _weights(n, split.l), _weights(n, split.k)
    entries = []
    for assignment in itertools.permutations(range(n), t):
        row = sum(assignment[b - 1] * w for b, w in zip(row_labels, row_weights, strict=True))
        col = sum(assignment[b - 1] * w for b, w in zip(col_labels, col_weights, strict=True))
        entries.append((row, col))
    return BasisMatrix(
        shape=(n**split.l, n**split.k),
        entries=tuple(entries),
        n=n,
        k=split.k,
        l=split.l,
        source_partition=partition,
    )


def _guard_basis_size(n: int, k: int, l: int, force: bool) -> None:  # noqa: E741
    # the orbits tile the grid, so the basis stores exactly n^(l+k) entries
    ensure_within_cap(
        f"Basis of Hom(M_{n}^{k}, M_{n}^{l})",
        n ** (l + k),
        settings.max_matrix_entries,
        force=force,
    )


def full_basis(
    n: int,
    k: int,
    l: int,  # noqa: E741
    *,
    workers: int | None = None,
    force: bool = False,
) -> list[BasisMatrix]:
    """One ``X_π`` per partition of ``[l+k]`` with at most ``n`` blocks.

    Order follows :func:`enumerate_set_partitions` regardless of ``workers``.
    """

    _require_n(n)
    split = ShapeSplit(l, k)
    _guard_basis_size(n, k, l, force)
    partitions = enumerate_set_partitions(split.m, n)
    pool_size = workers if workers is not None else settings.WORKERS
    if pool_size > 1 and len(partitions) > 1:
        with ThreadPoolExecutor(max_workers=pool_size) as pool:
            basis = list(pool.map(lambda p: basis_matrix(p, n, split), partitions))
    else:
        basis = [basis_matrix(p, n, split) for p in partitions]

    stored = sum(matrix.entry_count for matrix in basis)
    if stored != n**split.m:
        raise InternalConsistencyError(
            "Orbit sizes do not add up to the grid size",
            details={"stored": stored, "expected": n**split.m},
        )
    logger.debug(
        "Generated basis",
        extra={"n": n, "k": k, "l": l, "size": len(basis), "entries": stored},
    )
    return basis


@cache
def _basis_lookup(
    n: int, k: int, l: int, force: bool  # noqa: E741
) -> dict[SetPartition, BasisMatrix]:
    return {m.source_partition: m for m in full_basis(n, k, l, force=force)}


def bias_basis(n: int, l: int, *, force: bool = False) -> list[BasisMatrix]:  # noqa: E741
    """Column vectors spanning the invariant biases in ``M_n^{⊗l}``."""

    return full_basis(n, 0, l, force=force)


def kernel_dimension(n: int, k: int, l: int) -> int:  # noqa: E741
    """Partitions of ``[l+k]`` with more than ``n`` blocks."""

    return bell(l + k) - restricted_bell(l + k, n)


def is_isomorphism_regime(n: int, k: int, l: int) -> bool:  # noqa: E741
    return n >= l + k


def phi_map(a: AlgebraElement, n: int, *, force: bool = False) -> np.ndarray:
    """Image of ``a`` in ``Hom(M_n^{⊗k}, M_n^{⊗l})`` as an exact dense matrix.

    Orbit terms with more than ``n`` blocks map to zero.
    """

    _require_n(n)
    split = a.split
    rows, cols = n**split.l, n**split.k
    ensure_within_cap(
        "Dense image matrix", rows * cols, settings.max_matrix_entries, force=force
    )
    orbit = transition_to_orbit(a) if a.kind == BasisKind.DIAGRAM else a
    lookup = _basis_lookup(n, split.k, split.l, force)
    image = np.zeros((rows, cols), dtype=object)
    for partition, coeff in orbit.terms.items():
        matrix = lookup.get(partition)
        if matrix is None:
            continue
        for r, c in matrix.entries:
            image[r, c] += coeff
    return image


def phi_on_diagram(a: AlgebraElement, n: int, *, force: bool = False) -> np.ndarray:
    """``Φ_{k,n}`` on the partition algebra ``P_k(n)``."""

    if not a.split.is_square:
        raise ShapeMismatchError(
            "Φ on the partition algebra needs l = k",
            details={"l": a.split.l, "k": a.split.k},
        )
    return phi_map(a, n, force=force)


def phi_kernel_dimension(n: int, k: int, l: int, *, force: bool = False) -> int:  # noqa: E741
    """``dim ker Φ`` measured as ``bell(l+k)`` minus the exact rank of the images.

    Each image lies in the span of the orbit basis, whose supports are
    disjoint, so it is read off at one representative cell per orbit.
    """

    _require_n(n)
    split = ShapeSplit(l, k)
    partitions = enumerate_set_partitions(split.m)
    ensure_within_cap(
        "Stacked image matrices",
        len(partitions) * n**split.m,
        settings.max_matrix_entries,
        force=force,
    )
    cells = [matrix.entries[0] for matrix in full_basis(n, k, l, force=force)]
    rows = []
    for partition in partitions:
        image = phi_map(AlgebraElement.basis(partition, split), n, force=force)
        values = [image[r, c] for r, c in cells]
        rows.append([QQ(v.numerator, v.denominator) for v in values])
    rank = DomainMatrix(rows, (len(rows), len(cells)), QQ).rank()
    logger.debug("Measured kernel", extra={"n": n, "k": k, "l": l, "rank": rank})
    return len(partitions) - rank


class FeatureBasis(Sequence[FeatureBasisMatrix]):
    """Lazily indexed ``X_π ⊗ E_{i,j}`` with the feature index least significant.

    Element order: partition (outermost), output feature ``i``, input
    feature ``j``.
    """

    def __init__(self, n: int, k: int, l: int, d_k: int, d_l: int) -> None:  # noqa: E741
        if d_k < 1 or d_l < 1:
            raise InvalidInputError(
                "Feature dimensions must be positive", details={"d_k": d_k, "d_l": d_l}
            )
        _require_n(n)
        self.n, self.k, self.l = n, k, l
        self.d_k, self.d_l = d_k, d_l
        self._partitions = enumerate_set_partitions(l + k, n)

    def __len__(self) -> int:
        return len(self._partitions) * self.d_k * self.d_l

    def _element(self, index: int) -> FeatureBasisMatrix:
        p, rest = divmod(index, self.d_k * self.d_l)
        i, j = divmod(rest, self.d_k)
        base = basis_matrix(self._partitions[p], self.n, ShapeSplit(self.l, self.k))
        entries = tuple(
            (r * self.d_l + i, c * self.d_k + j) for r, c in base.entries
        )
        return FeatureBasisMatrix(
            shape=(base.rows * self.d_l, base.cols * self.d_k),
            entries=entries,
            base=base,
            feature_row=i + 1,
            feature_col=j + 1,
        )

    def __getitem__(self, index):  # type: ignore[override]
        if isinstance(index, slice):
            return [self._element(i) for i in range(*index.indices(len(self)))]
        if index < 0:
            index += len(self)
        if not 0 <= index < len(self):
            raise IndexError(index)
        return self._element(index)


def feature_basis(n: int, k: int, l: int, d_k: int, d_l: int) -> FeatureBasis:  # noqa: E741
    return FeatureBasis(n, k, l, d_k, d_l)


def _check_permutation(sigma: Sequence[int], n: int) -> Permutation:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise InvalidInputError(
            f"Not a permutation of 1..{n}", details={"sigma": list(sigma)}
        )
    return sigma


def index_permutation(sigma: Sequence[int], n: int, m: int) -> list[int]:
    """Flat image table of ``I -> σ(I)`` on ``[n]^m`` (one-line ``σ``)."""

    sigma = _check_permutation(sigma, n)
    images = [0]
    for _ in range(m):
        images = [prefix * n + (s - 1) for prefix in images for s in sigma]
    return images


@dataclass(frozen=True)
class PermutationMatrix:
    """Sparse permutation matrix: column ``j`` has its one at row ``images[j]``."""

    images: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.images)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.size, self.size), dtype=np.int64)
        dense[list(self.images), list(range(self.size))] = 1
        return dense


def permutation_tensor_matrix(sigma: Sequence[int], n: int, k: int) -> PermutationMatrix:
    """``ρ_k(σ)``: ``e_I -> e_{σ(I)}`` with ``σ`` in one-line notation."""

    return PermutationMatrix(tuple(index_permutation(sigma, n, k)))


@dataclass(frozen=True)
class EquivarianceReport:
    passed: bool
    permutations_checked: int
    counterexample: tuple[Permutation, ...] | None = None

    def __bool__(self) -> bool:
        return self.passed


def generator_permutations(n: int) -> list[Permutation]:
    """Adjacent transpositions and the ``n``-cycle, in one-line notation."""

    generators: list[Permutation] = []
    for i in range(1, n):
        sigma = list(range(1, n + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        generators.append(tuple(sigma))
    if n > 2:
        generators.append(tuple([*range(2, n + 1), 1]))
    return generators


def random_permutations(n: int, trials: int, seed: int) -> Iterator[Permutation]:
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        yield tuple(int(v) + 1 for v in rng.permutation(n))


def is_invariant(
    matrix: SparseBinaryMatrix | np.ndarray,
    row_images: Sequence[int],
    col_images: Sequence[int],
) -> bool:
    """``M[σ(I), σ(J)] == M[I, J]`` for every cell."""

    if isinstance(matrix, SparseBinaryMatrix):
        moved = {(row_images[r], col_images[c]) for r, c in matrix.entries}
        return moved == matrix.support
    dense = np.asarray(matrix)
    return bool(np.array_equal(dense[np.ix_(row_images, col_images)], dense))


def _shape_of(matrix: SparseBinaryMatrix | np.ndarray) -> tuple[int, int]:
    if isinstance(matrix, SparseBinaryMatrix):
        return matrix.shape
    shape = np.asarray(matrix).shape
    if len(shape) != 2:
        raise ShapeMismatchError("Expected a two-dimensional matrix")
    return int(shape[0]), int(shape[1])


def verify_equivariance(
    matrix: SparseBinaryMatrix | np.ndarray,
    n: int,
    k: int,
    l: int,  # noqa: E741
    trials: int | None = None,
    seed: int | None = None,
) -> EquivarianceReport:
    """Check ``ρ_l(σ) M = M ρ_k(σ)`` on the generators plus random ``σ``."""

    _require_n(n)
    expected = (n**l, n**k)
    if _shape_of(matrix) != expected:
        raise ShapeMismatchError(
            f"Matrix shape {_shape_of(matrix)} is not {expected}",
            details={"expected": list(expected)},
        )
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed

    checked = 0
    candidates = itertools.chain(
        generator_permutations(n), random_permutations(n, trials, seed)
    )
    for sigma in candidates:
        checked += 1
        rows = index_permutation(sigma, n, l)
        cols = index_permutation(sigma, n, k)
        if not is_invariant(matrix, rows, cols):
            return EquivarianceReport(False, checked, (sigma,))
    return EquivarianceReport(True, checked)


def oracle_basis(n: int, k: int, l: int) -> list[SparseBinaryMatrix]:  # noqa: E741
    """Orbit indicators found by union-find over the whole index grid.

    Uses only the generator action, never set partitions. Orbits are sorted
    by their smallest ``(row, col)`` entry.
    """

    _require_n(n)
    rows, cols = n**l, n**k
    ensure_within_cap("Oracle grid", rows * cols, settings.oracle_max_cells)
    actions = []
    for sigma in generator_permutations(n):
        row_images = index_permutation(sigma, n, l)
        col_images = index_permutation(sigma, n, k)
        actions.append(
            [
                row_images[cell // cols] * cols + col_images[cell % cols]
                for cell in range(rows * cols)
            ]
        )
    orbits = find_orbits(actions, rows * cols)
    basis = [
        SparseBinaryMatrix(
            shape=(rows, cols),
            entries=tuple(divmod(cell, cols) for cell in orbit),
        )
        for orbit in orbits
    ]
    log.debug("oracle_orbits", n=n, k=k, l=l, cells=rows * cols, orbits=len(basis))
    return basis


def orbit_size(partition: SetPartition, n: int) -> int:
    """Falling factorial ``n (n-1) ... (n-t+1)``."""

    return perm(n, partition.block_count)
