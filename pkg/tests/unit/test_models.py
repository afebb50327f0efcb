"""Unit tests for the value types."""

import numpy as np
import pytest

from equilayer.core.exceptions import InvalidInputError, SizeCapExceededError
from equilayer.models.diagram import AlgebraElement, BasisKind
from equilayer.models.matrix import SparseBinaryMatrix
from equilayer.models.partition import IntegerPartition
from equilayer.models.set_partition import SetPartition, ShapeSplit


class TestIntegerPartition:
    def test_parse_forms(self):
        expected = IntegerPartition.of(4, 1, 1)
        assert IntegerPartition.parse("(4,1^2)") == expected
        assert IntegerPartition.parse("(4, 1, 1)") == expected
        assert IntegerPartition.parse("4,1,1") == expected

    def test_labels(self):
        lam = IntegerPartition.of(3, 1, 1, 1)
        assert lam.label == "(3,1,1,1)"
        assert lam.power_label == "(3,1^3)"
        assert (lam.n, lam.length) == (6, 4)
        assert lam.part(1) == 3
        assert lam.part(5) == 0

    @pytest.mark.parametrize("text", ["()", "(2,x)", "(1,2)", "(0)"])
    def test_rejects_bad_input(self, text):
        with pytest.raises(InvalidInputError):
            IntegerPartition.parse(text)


class TestSetPartition:
    def test_parse_canonicalises(self):
        partition = SetPartition.parse("{4,2|3,1}")
        assert partition.blocks == ((1, 3), (2, 4))
        assert partition.labels == (1, 2, 1, 2)
        assert str(partition) == "{1, 3 | 2, 4}"
        assert SetPartition.parse("{1,3/2,4}") == partition

    def test_constructors(self):
        assert SetPartition.from_labels("abab") == SetPartition.parse("{1,3|2,4}")
        assert SetPartition.singletons(3).block_count == 3
        assert SetPartition.single_block(3).blocks == ((1, 2, 3),)
        assert SetPartition.single_block(0) == SetPartition.parse("{}")
        assert SetPartition.from_blocks([[2], [1]], m=2).to_json() == [[1], [2]]

    @pytest.mark.parametrize(
        ("m", "blocks"),
        [
            (3, ((1, 2),)),
            (2, ((1, 2), (2,))),
            (2, ((2,), (1,))),
            (2, ((2, 1),)),
            (1, ((),)),
            (-1, ()),
        ],
    )
    def test_validation(self, m, blocks):
        with pytest.raises(InvalidInputError):
            SetPartition(m, blocks)

    def test_parse_rejects_garbage(self):
        with pytest.raises(InvalidInputError):
            SetPartition.parse("{1,a|2}")

    def test_shape_split(self):
        split = ShapeSplit(2, 3)
        assert split.m == 5
        assert not split.is_square
        assert ShapeSplit.square(2).is_square
        with pytest.raises(InvalidInputError):
            ShapeSplit(-1, 0)


class TestSparseBinaryMatrix:
    def test_entries_are_sorted(self):
        matrix = SparseBinaryMatrix((2, 3), ((1, 0), (0, 2)))
        assert matrix.entries == ((0, 2), (1, 0))
        assert (0, 2) in matrix
        assert (1, 1) not in matrix
        assert (matrix.rows, matrix.cols, matrix.entry_count) == (2, 3, 2)

    def test_to_dense(self):
        dense = SparseBinaryMatrix((2, 2), ((0, 1),)).to_dense()
        assert np.array_equal(dense, np.array([[0, 1], [0, 0]]))
        assert not SparseBinaryMatrix((1, 2), ()).to_dense().any()

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            SparseBinaryMatrix((2, 2), ((0, 0), (0, 0)))
        with pytest.raises(InvalidInputError):
            SparseBinaryMatrix((2, 2), ((2, 0),))

    def test_dense_output_respects_the_cap(self):
        huge = SparseBinaryMatrix((10**4, 10**4), ((0, 0),))
        with pytest.raises(SizeCapExceededError):
            huge.to_dense()


class TestAlgebraElement:
    def test_zero_terms_are_pruned_and_collected(self):
        split = ShapeSplit.square(1)
        element = AlgebraElement.from_terms(
            split,
            BasisKind.DIAGRAM,
            [
                (SetPartition.parse("{1,2}"), 2),
                (SetPartition.parse("{1|2}"), 1),
                (SetPartition.parse("{1|2}"), -1),
            ],
        )
        assert element.terms == {SetPartition.parse("{1,2}"): 2}
        assert element.k == 1

    def test_terms_must_match_the_shape(self):
        with pytest.raises(InvalidInputError):
            AlgebraElement.basis(SetPartition.parse("{1,2,3}"), ShapeSplit.square(1))
