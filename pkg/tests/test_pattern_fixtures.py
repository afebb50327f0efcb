"""Appendix reproduction and weight-sharing pattern comparison."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equilayer.core.exceptions import InternalConsistencyError, InvalidInputError
from equilayer.fixtures import APPENDICES, load_appendix
from equilayer.models.matrix import SparseBinaryMatrix
from equilayer.models.pattern import PatternMatrix
from equilayer.services.equimap import full_basis
from equilayer.services.pattern import (
    canonical_pattern,
    pattern_from_basis,
    patterns_match,
)
from equilayer.services.verification import AppendixService


@pytest.mark.parametrize("which", APPENDICES)
def test_every_appendix_fixture_is_reproduced(which):
    outcomes = AppendixService().check(which)
    assert outcomes
    for outcome in outcomes:
        assert outcome.passed, (outcome.fixture.name, outcome.first_difference)
        assert outcome.generated.class_count == outcome.fixture.classes
        assert outcome.generated.shape == outcome.fixture.shape


def test_appendix_lookup_is_case_insensitive():
    assert load_appendix("b") is load_appendix("B")
    with pytest.raises(InvalidInputError):
        load_appendix("Z")


def test_tampered_fixture_reports_first_difference():
    fixture = load_appendix("B").fixtures[0]
    cells = [list(row) for row in fixture.cells]
    cells[0][1] = cells[0][2]
    tampered = PatternMatrix(fixture.shape, tuple(tuple(row) for row in cells))

    generated = AppendixService().generate(fixture)
    passed, difference = patterns_match(generated, tampered)
    assert not passed
    assert difference == (0, 2)


def test_bias_pattern_for_four_points():
    """The bias vector on M_4^{⊗2} has the diagonal as one class."""

    fixture = load_appendix("A").fixtures[1]
    generated = AppendixService().generate(fixture)
    assert generated.shape == (16, 1)
    column = [row[0] for row in generated.cells]
    assert [i for i, v in enumerate(column) if v == column[0]] == [0, 5, 10, 15]


def test_pattern_from_basis_requires_a_tiling():
    basis = full_basis(2, 1, 1)
    with pytest.raises(InternalConsistencyError):
        pattern_from_basis(basis[:1])
    with pytest.raises(InternalConsistencyError):
        pattern_from_basis([basis[0], basis[0]])
    with pytest.raises(InvalidInputError):
        pattern_from_basis([])
    with pytest.raises(InvalidInputError):
        pattern_from_basis([basis[0], SparseBinaryMatrix((3, 3), ())])


def test_canonical_pattern_numbers_by_first_occurrence():
    pattern = canonical_pattern(full_basis(4, 1, 1))
    assert pattern.cells[0] == (1, 2, 2, 2)
    assert pattern.cells[1] == (2, 1, 2, 2)


def test_pattern_render_and_transpose():
    pattern = PatternMatrix.from_rows([[1, 2], [10, 1]])
    assert pattern.render() == " 1  2\n10  1"
    assert pattern.transpose().cells == ((1, 10), (2, 1))
    assert pattern.first_difference(pattern.transpose()) == (0, 1)
    assert pattern.first_difference(PatternMatrix.from_rows([[1, 2]])) == (0, 0)


def test_pattern_validation():
    with pytest.raises(InvalidInputError):
        PatternMatrix((2, 2), ((1, 2),))
    with pytest.raises(InvalidInputError):
        PatternMatrix((1, 2), ((0, 1),))


grids = st.integers(1, 4).flatmap(
    lambda cols: st.lists(
        st.lists(st.integers(1, 6), min_size=cols, max_size=cols), min_size=1, max_size=4
    )
)


@given(grids, st.permutations(range(1, 7)))
def test_canonical_form_ignores_relabelling(rows, images):
    pattern = PatternMatrix.from_rows(rows)
    relabelled = pattern.relabel(dict(zip(range(1, 7), images, strict=True)))
    assert relabelled.canonical() == pattern.canonical()
    assert pattern.canonical().canonical() == pattern.canonical()
    assert patterns_match(pattern, relabelled) == (True, None)
    assert relabelled.class_count == pattern.class_count
