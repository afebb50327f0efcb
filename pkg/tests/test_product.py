"""Tests for layers equivariant to products of symmetric groups."""

import pytest
from hypothesis import given, settings

from equilayer.core.exceptions import InvalidInputError, ShapeMismatchError
from equilayer.models.product import DiagramTuple, ProductBasisMatrix
from equilayer.models.set_partition import SetPartition, ShapeSplit
from equilayer.schemas.layer import LayerSpec
from equilayer.services.equimap import full_basis
from equilayer.services.pattern import pattern_from_basis
from equilayer.services.product import (
    demarcation_embed,
    enumerate_diagram_tuples,
    global_dim,
    kronecker_entries,
    plain_feature_dim,
    product_basis,
    product_basis_matrix,
    product_dim,
    support_matches_embedding,
    verify_product_equivariance,
)
from equilayer.services.setpart import restricted_bell
from tests.strategies import layer_spec_texts

S = SetPartition.parse

THREE_FACTORS = "2:1->1,2:1->1,2:1->1"
MIXED = "2:2->1,4:1->1"
SPECS = [THREE_FACTORS, MIXED, "3:1->2,2:1->0", "2:2->2,3:0->1", "3:1->1,f 2:1->1"]


def test_product_dimensions():
    assert product_dim(LayerSpec.parse(THREE_FACTORS)) == 8
    assert product_dim(LayerSpec.parse(MIXED)) == 8
    assert global_dim(LayerSpec.parse(MIXED)) == 52
    assert global_dim(LayerSpec.parse(THREE_FACTORS)) == 203


@pytest.mark.parametrize("text", SPECS)
def test_product_dimension_is_below_the_global_one(text):
    spec = LayerSpec.parse(text)
    assert product_dim(spec) <= global_dim(spec)
    assert len(enumerate_diagram_tuples(spec)) == product_dim(spec)


@settings(max_examples=20, derandomize=True)
@given(layer_spec_texts())
def test_random_product_layers_sit_inside_the_global_space(text):
    spec = LayerSpec.parse(text)
    assert product_dim(spec) <= global_dim(spec)
    assert global_dim(spec) == restricted_bell(spec.total_split.m, spec.total_n)


def test_tuples_run_rightmost_factor_fastest():
    tuples = enumerate_diagram_tuples(LayerSpec.parse("2:1->1,2:1->1"))
    assert [t.partitions for t in tuples] == [
        (S("{1,2}"), S("{1,2}")),
        (S("{1,2}"), S("{1|2}")),
        (S("{1|2}"), S("{1,2}")),
        (S("{1|2}"), S("{1|2}")),
    ]


def test_single_factor_product_is_the_plain_basis():
    spec = LayerSpec.single(3, 2, 1)
    plain = full_basis(3, 2, 1)
    product = product_basis(spec)
    assert [m.entries for m in product] == [m.entries for m in plain]


def test_kronecker_entries_left_operand_most_significant():
    entries, shape = kronecker_entries(((0, 1),), (2, 2), ((1, 0),), (2, 3))
    assert shape == (4, 6)
    assert entries == ((1, 3),)


def test_identity_identity_swap_row():
    spec = LayerSpec.parse(THREE_FACTORS)
    split = ShapeSplit(1, 1)
    t = DiagramTuple(((S("{1,2}"), split), (S("{1,2}"), split), (S("{1|2}"), split)))
    matrix = product_basis_matrix(t, spec)
    assert matrix.shape == (8, 8)
    assert matrix.entries == (
        (0, 1), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4), (6, 7), (7, 6)
    )
    assert matrix.source == t


def test_product_basis_matrix_rejects_bad_tuples():
    spec = LayerSpec.parse("2:1->1,2:1->1")
    split = ShapeSplit(1, 1)
    with pytest.raises(ShapeMismatchError):
        product_basis_matrix(DiagramTuple(((S("{1,2}"), split),)), spec)
    with pytest.raises(ShapeMismatchError):
        product_basis_matrix(
            DiagramTuple(((S("{1,2}"), split), (S("{1|2|3}"), ShapeSplit(1, 2)))), spec
        )
    crowded = LayerSpec.parse("1:1->1")
    with pytest.raises(InvalidInputError):
        product_basis_matrix(DiagramTuple(((S("{1|2}"), split),)), crowded)


def test_demarcation_embed_two_factors():
    t = DiagramTuple(((S("{1,2|3}"), ShapeSplit(1, 2)), (S("{1|2}"), ShapeSplit(1, 1))))
    embedded, split = demarcation_embed(t)
    assert split == ShapeSplit(2, 3)
    assert embedded == S("{1,3|2|4|5}")


def test_demarcation_embed_four_factors():
    splits = [ShapeSplit(1, 2), ShapeSplit(1, 1), ShapeSplit(2, 2), ShapeSplit(0, 3)]
    components = (
        (S("{1,3|2}"), splits[0]),
        (S("{1,2}"), splits[1]),
        (S("{1,4|2|3}"), splits[2]),
        (S("{1,2,3}"), splits[3]),
    )
    embedded, split = demarcation_embed(DiagramTuple(components))
    assert split == ShapeSplit(4, 8)
    assert embedded.block_count == 2 + 1 + 3 + 1
    assert embedded == S("{1,6|2,7|3,9|4|5|8|10,11,12}")


def test_demarcation_embed_leaves_single_factor_unchanged():
    partition = S("{1,4|2|3}")
    embedded, split = demarcation_embed(DiagramTuple(((partition, ShapeSplit(2, 2)),)))
    assert embedded == partition
    assert split == ShapeSplit(2, 2)


@pytest.mark.parametrize("text", SPECS)
def test_product_basis_tiles_and_is_equivariant(text):
    spec = LayerSpec.parse(text)
    basis = product_basis(spec)
    pattern = pattern_from_basis(basis)
    assert pattern.shape == (spec.rows, spec.cols)
    assert pattern.class_count == product_dim(spec)
    for matrix in basis:
        assert verify_product_equivariance(matrix, spec, trials=10, seed=5).passed
        assert support_matches_embedding(matrix, spec)


def test_product_equivariance_rejects_a_single_group_basis_element():
    """A cell indicator is not invariant under any factor transposition."""

    spec = LayerSpec.parse(MIXED)
    unit = ProductBasisMatrix(shape=(spec.rows, spec.cols), entries=((0, 0),))
    report = verify_product_equivariance(unit, spec, trials=3, seed=1)
    assert not report.passed
    assert report.permutations_checked == 1
    with pytest.raises(ShapeMismatchError):
        verify_product_equivariance(ProductBasisMatrix(shape=(2, 2), entries=()), spec)


def test_support_check_detects_a_wrong_source():
    spec = LayerSpec.parse("2:1->1,2:1->1")
    first, second = product_basis(spec)[:2]
    relabelled = ProductBasisMatrix(
        shape=first.shape, entries=first.entries, source=second.source
    )
    assert not support_matches_embedding(relabelled, spec)
    with pytest.raises(InvalidInputError):
        support_matches_embedding(ProductBasisMatrix(shape=(4, 4), entries=()), spec)


def test_feature_factors_are_ordinary_factors():
    spec = LayerSpec.parse("3:1->1,f 2:1->1")
    assert spec.factors[1].feature
    assert str(spec) == "3:1->1,f 2:1->1"
    assert product_dim(spec) == 4
    assert (spec.rows, spec.cols) == (6, 6)


def test_plain_feature_dimension():
    spec = LayerSpec.parse("2:1->1")
    assert plain_feature_dim(spec, 3, 2) == 12
    with pytest.raises(InvalidInputError):
        plain_feature_dim(spec, 0, 2)
