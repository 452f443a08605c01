import pytest
from hypothesis import given, strategies as st

from pedalwords.errors import DimensionError, EmptyWordError, FormatError
from pedalwords.words import (
    Word1D,
    Word2D,
    col_concat,
    is_primitive_1d,
    is_primitive_2d,
    power_2d,
    row_concat,
)

from conftest import all_binary_words, periodic_words_by_generation


def W(*rows):
    return Word2D(tuple(tuple(r) for r in rows))


def test_row_concat():
    assert row_concat(W([0, 1]), W([1, 0])) == W([0, 1], [1, 0])
    assert row_concat(W([0]), W([0])) == W([0], [0])
    with pytest.raises(DimensionError):
        row_concat(W([0, 1]), W([1, 0, 1]))


def test_col_concat():
    assert col_concat(W([0], [1]), W([1], [0])) == W([0, 1], [1, 0])
    with pytest.raises(DimensionError):
        col_concat(W([0], [1]), W([0, 0]))


def test_col_concat_of_eta_columns():
    # columns of "0" and "3" are (0,1) and (1,0)
    assert col_concat(W([0], [1]), W([1], [0])) == W([0, 1], [1, 0])


def test_concat_rejects_mixed_alphabets():
    with pytest.raises(DimensionError):
        row_concat(Word2D(((0,),), 2), Word2D(((0,),), 3))


def test_power_2d():
    V = W([0, 1], [1, 0])
    assert power_2d(V, 1, 1) == V
    assert power_2d(W([0], [1]), 1, 2) == W([0, 0], [1, 1])
    assert power_2d(W([0, 1]), 2, 1) == W([0, 1], [0, 1])
    with pytest.raises(ValueError):
        power_2d(V, 0, 1)


def test_is_primitive_1d():
    assert not is_primitive_1d(Word1D.parse("0101"))
    assert is_primitive_1d(Word1D.parse("0"))
    assert is_primitive_1d(Word1D.parse("0000032", 4))
    assert not is_primitive_1d(Word1D.parse("000", 2))
    assert is_primitive_1d(Word1D.parse("0010", 2))
    with pytest.raises(EmptyWordError):
        is_primitive_1d(Word1D.parse(""))


def test_is_primitive_2d_examples():
    assert is_primitive_2d(W([0, 0], [0, 1]))
    assert not is_primitive_2d(W([0, 1], [0, 1]))
    assert not is_primitive_2d(W([0, 0, 0], [0, 0, 0]))
    assert is_primitive_2d(W([1]))


def test_ten_primitive_2x2_words():
    listed = {
        "00/01", "00/10", "01/00", "10/00", "11/10",
        "11/01", "10/11", "01/11", "01/10", "10/01",
    }
    found = {w.to_text("/") for w in all_binary_words(2, 2) if is_primitive_2d(w)}
    assert found == listed


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_primitivity_matches_generated_powers(m, n):
    periodic = periodic_words_by_generation(m, n)
    for w in all_binary_words(m, n):
        assert is_primitive_2d(w) == (w not in periodic), w


def test_text_format_roundtrip():
    w = Word2D.parse("0000011\n1111101")
    assert w.shape == (2, 7)
    assert w[1, 5] == 0
    assert str(w) == "0000011\n1111101"
    assert Word2D.parse("01/10", sep="/").to_text("/") == "01/10"


@pytest.mark.parametrize("bad", ["01\n1", "0a\n11", "", "01\n\n10"])
def test_parse_rejects_bad_text(bad):
    with pytest.raises((FormatError, EmptyWordError)):
        Word2D.parse(bad)


def test_rejects_out_of_alphabet_symbols():
    with pytest.raises(FormatError):
        Word2D(((0, 2),), 2)
    with pytest.raises(FormatError):
        Word1D((4,), 4)


def test_index_is_total_on_declared_shape():
    w = W([0, 1, 1], [1, 0, 0])
    assert [w[i, j] for i in range(2) for j in range(3)] == [0, 1, 1, 1, 0, 0]
    with pytest.raises(IndexError):
        w[2, 0]


words_2d = st.integers(1, 3).flatmap(
    lambda m: st.integers(1, 3).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=m, max_size=m
        )
    )
).map(lambda rows: Word2D(tuple(map(tuple, rows))))


@given(words_2d, st.integers(1, 3), st.integers(1, 3))
def test_proper_powers_are_never_primitive(w, p, q):
    if p + q > 2:
        assert not is_primitive_2d(power_2d(w, p, q))


@given(words_2d, words_2d, words_2d)
def test_concat_associative(a, b, c):
    if a.cols == b.cols == c.cols:
        assert row_concat(row_concat(a, b), c) == row_concat(a, row_concat(b, c))
    if a.rows == b.rows == c.rows:
        assert col_concat(col_concat(a, b), c) == col_concat(a, col_concat(b, c))
