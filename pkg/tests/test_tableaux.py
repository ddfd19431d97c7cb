import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclebetti.errors import DomainError, TableauParseError, TableauValidationError
from cyclebetti.tableaux import (
    Shape,
    Tableau,
    enumerate_standard_tableaux,
    format_tableau,
    hook_length_count,
    hook_shape,
    parse_tableau,
    transpose,
)


def partitions_of(n, max_part=None):
    # independent oracle: all partitions, largest part first
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first, *rest)


@st.composite
def standard_tableaux(draw):
    n = draw(st.integers(1, 7))
    parts = draw(st.sampled_from([p for p in partitions_of(n)]))
    return draw(st.sampled_from(enumerate_standard_tableaux(Shape(parts))))


class TestShape:
    @pytest.mark.parametrize("parts", [(1, 2), (0,), (), (2, -1)])
    def test_rejects_non_partitions(self, parts):
        with pytest.raises(DomainError):
            Shape(parts)

    def test_size(self):
        assert Shape((3, 2, 1)).size == 6

    def test_conjugate_known(self):
        assert Shape((3, 2, 1)).conjugate() == Shape((3, 2, 1))
        assert Shape((2, 2, 1)).conjugate() == Shape((3, 2))
        assert Shape((4,)).conjugate() == Shape((1, 1, 1, 1))

    def test_conjugate_is_involutive(self):
        for n in range(1, 9):
            for parts in partitions_of(n):
                shape = Shape(parts)
                assert shape.conjugate().conjugate() == shape


class TestHookShape:
    def test_known_shapes(self):
        assert hook_shape(5, 2) == Shape((2, 2, 1))
        assert hook_shape(6, 3) == Shape((3, 2, 1))
        assert hook_shape(4, 2) == Shape((2, 2))
        assert hook_shape(7, 5) == Shape((5, 2))

    @pytest.mark.parametrize("n,j", [(3, 2), (5, 1), (5, 4), (4, 3), (4, 1)])
    def test_rejects_out_of_range(self, n, j):
        with pytest.raises(DomainError):
            hook_shape(n, j)

    def test_conjugate_swaps_row_and_column(self):
        for n in range(4, 13):
            for j in range(2, n - 1):
                assert hook_shape(n, j).conjugate() == hook_shape(n, n - j)


class TestTableauValidation:
    def test_row_must_increase(self):
        with pytest.raises(TableauValidationError, match="row 1"):
            Tableau(((2, 1), (3, 4), (5,)))

    def test_column_must_increase(self):
        with pytest.raises(TableauValidationError, match="column"):
            Tableau(((1, 4), (2, 3)))

    def test_entries_must_cover_range(self):
        with pytest.raises(TableauValidationError, match="exactly"):
            Tableau(((1, 2), (3, 5)))
        with pytest.raises(TableauValidationError, match="exactly"):
            Tableau(((1, 2), (2, 3)))

    def test_row_lengths_must_weakly_decrease(self):
        with pytest.raises(TableauValidationError, match="decreasing"):
            Tableau(((1,), (2, 3)))

    def test_top_left_is_always_one(self):
        for parts in partitions_of(6):
            for t in enumerate_standard_tableaux(Shape(parts)):
                assert t.entry(1, 1) == 1

    def test_entry_and_position(self):
        t = parse_tableau("1,3;2,4;5")
        assert t.entry(1, 2) == 3
        assert t.entry(2, 2) == 4
        assert t.entry(3, 1) == 5
        assert t.position_of(4) == (2, 2)
        assert t.position_of(5) == (3, 1)
        with pytest.raises(ValueError):
            t.entry(3, 2)
        with pytest.raises(ValueError):
            t.position_of(9)


class TestEnumeration:
    def test_single_cell(self):
        assert enumerate_standard_tableaux(Shape((1,))) == [Tableau(((1,),))]

    def test_shape_221_exact_fillings(self):
        got = [format_tableau(t) for t in enumerate_standard_tableaux(Shape((2, 2, 1)))]
        assert got == [
            "1,2;3,4;5",
            "1,2;3,5;4",
            "1,3;2,4;5",
            "1,3;2,5;4",
            "1,4;2,5;3",
        ]

    def test_shape_321_count(self):
        assert len(enumerate_standard_tableaux(Shape((3, 2, 1)))) == 16

    def test_canonical_order_and_uniqueness(self):
        for parts in [(2, 2, 1), (3, 2, 1), (3, 3), (4, 1)]:
            tableaux = enumerate_standard_tableaux(Shape(parts))
            words = [t.reading_word for t in tableaux]
            assert words == sorted(words)
            assert len(set(words)) == len(words)

    def test_enumerated_tableaux_have_requested_shape(self):
        shape = Shape((3, 2))
        assert all(t.shape == shape for t in enumerate_standard_tableaux(shape))


class TestHookLengthCount:
    def test_known_counts(self):
        # 5! / (4*3*1*2*1) and 6! / (5*3*1*3*1*1)
        assert hook_length_count(Shape((2, 2, 1))) == 5
        assert hook_length_count(Shape((3, 2, 1))) == 16
        assert hook_length_count(Shape((2, 2))) == 2

    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_single_row_has_one_filling(self, n):
        assert hook_length_count(Shape((n,))) == 1

    def test_matches_enumeration_for_all_partitions(self):
        # full cross-oracle sweep, not only hook-plus-column shapes
        for n in range(1, 13):
            for parts in partitions_of(n):
                shape = Shape(parts)
                assert hook_length_count(shape) == len(enumerate_standard_tableaux(shape))


class TestTranspose:
    def test_known_transpose(self):
        assert transpose(parse_tableau("1,2;3,4;5")) == parse_tableau("1,3,5;2,4")

    @given(standard_tableaux())
    def test_involutive(self, t):
        assert transpose(transpose(t)) == t

    def test_maps_hook_family_onto_conjugate_family(self):
        for n in range(4, 10):
            for j in range(2, n - 1):
                image = {transpose(t) for t in enumerate_standard_tableaux(hook_shape(n, j))}
                assert image == set(enumerate_standard_tableaux(hook_shape(n, n - j)))


class TestTextFormat:
    @pytest.mark.parametrize("text", ["1,2;3,4;5", "1,2,4;3,6;5", "1,3;2,4;5", "1"])
    def test_round_trip_known_strings(self, text):
        assert format_tableau(parse_tableau(text)) == text

    @given(standard_tableaux())
    def test_round_trip_enumerated(self, t):
        assert parse_tableau(format_tableau(t)) == t

    def test_whitespace_tolerated(self):
        assert parse_tableau(" 1 , 2 ; 3 , 4 ; 5 ") == parse_tableau("1,2;3,4;5")

    @pytest.mark.parametrize("text", ["", "1,2;;3", "1,2;3,x;5", "1,,2", ";"])
    def test_malformed_text_is_a_parse_error(self, text):
        with pytest.raises(TableauParseError):
            parse_tableau(text)

    def test_non_standard_filling_is_a_validation_error(self):
        with pytest.raises(TableauValidationError, match="increasing"):
            parse_tableau("2,1;3,4;5")
        with pytest.raises(TableauValidationError, match="decreasing"):
            parse_tableau("1;2,3")

    def test_str_matches_format(self):
        t = parse_tableau("1,2;3,4;5")
        assert str(t) == "1,2;3,4;5"
