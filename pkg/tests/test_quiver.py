"""Tests for the McKay quiver, walk counts, Bratteli levels and dimensions."""

from fractions import Fraction

import numpy as np
import pytest

from equilayer.core.exceptions import InvalidInputError
from equilayer.models.partition import IntegerPartition
from equilayer.services.quiver import (
    bratteli_levels,
    build_quiver,
    end_dim,
    hom_dim,
    invariant_dim,
    multiplicities_via_bratteli,
    multiplicities_via_power,
    walk_count,
)
from equilayer.services.setpart import restricted_bell
from equilayer.services.young import specht_dimension

P = IntegerPartition.of

S6_ADJACENCY = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 2, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 3, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 1, 2, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 2, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
]


def test_quiver_for_s6_matches_published_adjacency():
    q = build_quiver(6)
    assert [list(row) for row in q.adjacency] == S6_ADJACENCY
    assert q.nodes[0] == P(6)
    assert q.nodes[-1] == P(1, 1, 1, 1, 1, 1)


def test_quiver_for_s2():
    q = build_quiver(2)
    assert q.nodes == (P(2), P(1, 1))
    assert q.adjacency == ((1, 1), (1, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_quiver_is_symmetric_with_two_edges_from_trivial(n):
    q = build_quiver(n)
    matrix = q.matrix()
    assert np.array_equal(matrix, matrix.T)
    trivial_row = q.adjacency[0]
    assert [v for v in trivial_row if v] == [1, 1]
    assert q.edge_count(P(n), P(n - 1, 1)) == 1


def test_build_quiver_rejects_n_one():
    with pytest.raises(InvalidInputError):
        build_quiver(1)


def test_quiver_csv_uses_semicolons_and_labels():
    lines = build_quiver(3).to_csv().splitlines()
    assert lines[0] == ";(3);(2,1);(1,1,1)"
    assert lines[1] == "(3);1;1;0"
    assert lines[2] == "(2,1);1;2;1"


def test_multiplicities_after_one_and_two_steps():
    q = build_quiver(6)
    first = multiplicities_via_power(q, 1)
    assert first.counts == {P(6): 1, P(5, 1): 1}
    second = multiplicities_via_power(q, 2)
    assert second[P(6)] == 2
    assert second[P(3, 3)] == 0
    zeroth = multiplicities_via_power(q, 0)
    assert zeroth.support == frozenset({P(6)})


def test_walk_count_returns_restricted_bell():
    q = build_quiver(6)
    assert walk_count(q, P(6), P(6), 4) == 15
    with pytest.raises(InvalidInputError):
        walk_count(q, P(5), P(6), 2)


def test_bratteli_levels_alternate_sizes():
    levels = list(bratteli_levels(6, 2))
    assert [level.level for level in levels] == [
        Fraction(0),
        Fraction(1, 2),
        Fraction(1),
        Fraction(3, 2),
        Fraction(2),
    ]
    assert levels[0].counts == {P(6): 1}
    assert levels[1].is_half
    assert levels[1].size == 5
    assert levels[1].counts == {P(5): 1}
    assert not levels[2].is_half


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_power_and_bratteli_multiplicities_agree(n, k):
    assert multiplicities_via_power(build_quiver(n), k) == multiplicities_via_bratteli(n, k)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("k", [0, 1, 2, 3, 4, 5])
def test_dimension_conservation(n, k):
    """Σ m_k^λ f^λ recovers dim M_n^{⊗k} = n^k."""

    vector = multiplicities_via_power(build_quiver(n), k)
    assert sum(count * specht_dimension(lam) for lam, count in vector.counts.items()) == n**k


@pytest.mark.parametrize(
    ("n", "k", "expected"), [(6, 2, 15), (2, 2, 8), (4, 0, 1), (3, 3, 122)]
)
def test_end_dim(n, k, expected):
    assert end_dim(n, k) == expected


@pytest.mark.parametrize(
    ("n", "k", "l", "expected"), [(2, 2, 1, 4), (2, 3, 0, 4), (3, 0, 0, 1)]
)
def test_hom_dim(n, k, l, expected):  # noqa: E741
    assert hom_dim(n, k, l) == expected


def test_invariant_dim_is_hom_to_trivial():
    assert invariant_dim(3, 5) == 41
    assert invariant_dim(4, 3) == hom_dim(4, 3, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_quiver_dimensions_match_set_partition_counts(n):
    """Two independent routes to the layer dimension agree."""

    for total in range(0, 9):
        for k in range(0, total + 1):
            assert hom_dim(n, k, total - k) == restricted_bell(total, n)
