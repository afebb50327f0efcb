"""Tests for set-partition enumeration, Stirling and restricted Bell counts."""

import pytest
from hypothesis import given

from equilayer.core.exceptions import InvalidInputError
from equilayer.models.set_partition import SetPartition, ShapeSplit
from equilayer.services.setpart import (
    bell,
    block_labelling,
    coarsenings,
    enumerate_set_partitions,
    permutation_module_profile,
    refinements,
    refines,
    refold,
    restricted_bell,
    restricted_growth_strings,
    stirling2,
)
from tests.strategies import set_partitions

S = SetPartition.parse

# rows k = 0..6, columns n = 2..8
EVEN_TABLE = {
    0: [1, 1, 1, 1, 1, 1, 1],
    1: [2, 2, 2, 2, 2, 2, 2],
    2: [8, 14, 15, 15, 15, 15, 15],
    3: [32, 122, 187, 202, 203, 203, 203],
    4: [128, 1094, 2795, 3845, 4111, 4139, 4140],
    5: [512, 9842, 43947, 86472, 109299, 115179, 115929],
    6: [2048, 88574, 700075, 2079475, 3403127, 4030523, 4189550],
}
EVEN_BELL = [1, 2, 15, 203, 4140, 115975, 4213597]

# rows k = 1..8, columns n = 2..8
INVARIANT_TABLE = {
    1: [1, 1, 1, 1, 1, 1, 1],
    2: [2, 2, 2, 2, 2, 2, 2],
    3: [4, 5, 5, 5, 5, 5, 5],
    4: [8, 14, 15, 15, 15, 15, 15],
    5: [16, 41, 51, 52, 52, 52, 52],
    6: [32, 122, 187, 202, 203, 203, 203],
    7: [64, 365, 715, 855, 876, 877, 877],
    8: [128, 1094, 2795, 3845, 4111, 4139, 4140],
}
INVARIANT_BELL = [1, 2, 5, 15, 52, 203, 877, 4140]


@pytest.mark.parametrize("k", sorted(EVEN_TABLE))
def test_restricted_bell_even_table(k):
    """Weight-matrix parameter counts for k-order layers, n = 2..8."""

    assert [restricted_bell(2 * k, n) for n in range(2, 9)] == EVEN_TABLE[k]
    assert bell(2 * k) == EVEN_BELL[k]


@pytest.mark.parametrize("k", sorted(INVARIANT_TABLE))
def test_restricted_bell_invariant_table(k):
    assert [restricted_bell(k, n) for n in range(2, 9)] == INVARIANT_TABLE[k]
    assert bell(k) == INVARIANT_BELL[k - 1]


def test_named_counts():
    assert bell(6) == 203
    assert restricted_bell(10, 3) == 9842
    assert restricted_bell(5, 3) == 41
    assert restricted_bell(0, 1) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(5, 5) == 1
    assert stirling2(0, 0) == 1
    assert stirling2(3, 5) == 0


def test_restricted_bell_rejects_bad_arguments():
    with pytest.raises(InvalidInputError):
        restricted_bell(3, 0)
    with pytest.raises(InvalidInputError):
        bell(-1)


def test_enumerate_two_and_three_element_partitions():
    assert enumerate_set_partitions(2) == (S("{1,2}"), S("{1|2}"))
    assert enumerate_set_partitions(3, 2) == (
        S("{1,2,3}"),
        S("{1,2|3}"),
        S("{1,3|2}"),
        S("{1|2,3}"),
    )
    assert len(enumerate_set_partitions(4, 2)) == 8


def test_enumerate_empty_ground_set():
    (empty,) = enumerate_set_partitions(0)
    assert empty.m == 0
    assert empty.block_count == 0


def test_enumerate_rejects_invalid_arguments():
    with pytest.raises(InvalidInputError):
        enumerate_set_partitions(-1)
    with pytest.raises(InvalidInputError):
        enumerate_set_partitions(3, 0)


@pytest.mark.parametrize("m", range(0, 8))
def test_enumeration_sizes_match_counts(m):
    for n in range(1, m + 2):
        partitions = enumerate_set_partitions(m, n)
        assert len(partitions) == restricted_bell(m, n)
        assert len(set(partitions)) == len(partitions)
        assert all(p.block_count <= n for p in partitions)


def test_growth_strings_are_lexicographic():
    strings = list(restricted_growth_strings(4))
    assert strings == sorted(strings)
    assert strings[0] == [0, 0, 0, 0]
    assert strings[-1] == [0, 1, 2, 3]


def test_permutation_module_profile():
    assert permutation_module_profile(4, 2) == {1: 1, 2: 7}
    assert sum(permutation_module_profile(4, 3).values()) == restricted_bell(4, 3)


@pytest.mark.parametrize(
    ("partition", "split", "expected"),
    [
        (S("{1,3|2,4|5|7|6,8}"), ShapeSplit(4, 4), ((1, 2, 1, 2), (3, 4, 5, 4))),
        (S("{1,2,3,4}"), ShapeSplit(1, 3), ((1,), (1, 1, 1))),
        (S("{1|2,3}"), ShapeSplit(1, 2), ((1,), (2, 2))),
    ],
)
def test_block_labelling(partition, split, expected):
    assert block_labelling(partition, split) == expected


def test_block_labelling_rejects_wrong_split():
    with pytest.raises(InvalidInputError):
        block_labelling(S("{1|2,3}"), ShapeSplit(2, 2))


def test_refines_examples():
    assert refines(S("{1|2|3}"), S("{1,2|3}"))
    assert not refines(S("{1,2|3}"), S("{1,3|2}"))
    with pytest.raises(InvalidInputError):
        refines(S("{1|2}"), S("{1,2,3}"))


@given(set_partitions(max_m=5))
def test_refinement_order_is_reflexive(partition):
    assert refines(partition, partition)
    assert partition in set(coarsenings(partition))
    assert partition in set(refinements(partition))


@pytest.mark.parametrize("m", range(7))
def test_refinement_order_is_antisymmetric_and_transitive(m):
    everything = enumerate_set_partitions(m)
    above = {
        finer: {coarser for coarser in everything if refines(finer, coarser)}
        for finer in everything
    }
    for finer, upper in above.items():
        for coarser in upper:
            if finer in above[coarser]:
                assert finer == coarser
            assert above[coarser] <= upper


@given(set_partitions(max_m=5))
def test_coarsenings_and_refinements_match_the_order(partition):
    everything = enumerate_set_partitions(partition.m)
    upper = {theta for theta in everything if refines(partition, theta)}
    lower = {theta for theta in everything if refines(theta, partition)}
    coarser = list(coarsenings(partition))
    finer = list(refinements(partition))
    assert set(coarser) == upper and len(coarser) == len(upper)
    assert set(finer) == lower and len(finer) == len(lower)


def test_singletons_are_below_everything():
    bottom = SetPartition.singletons(4)
    assert len(list(coarsenings(bottom))) == bell(4)
    assert list(coarsenings(SetPartition.single_block(4))) == [SetPartition.single_block(4)]


def test_refold_keeps_blocks():
    partition = S("{1,2,3}")
    assert refold(partition, ShapeSplit(1, 2), ShapeSplit(0, 3)) == partition
    with pytest.raises(InvalidInputError):
        refold(partition, ShapeSplit(1, 2), ShapeSplit(2, 2))
