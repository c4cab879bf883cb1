from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subrec import (
    EmptyPattern,
    InsufficientWindow,
    fixed_point_prefix,
    fractional_power,
    max_fractional_power,
    max_power_witness,
    min_return_length,
    occurrences,
    return_words,
    thue_morse,
    word_counts,
)
from oracles import (
    naive_max_power,
    naive_min_gap,
    naive_occurrences,
    naive_return_words,
)

TM256 = fixed_point_prefix(thue_morse(), "0", 256).text

binary = st.text(alphabet="01", min_size=0, max_size=60)
binary1 = st.text(alphabet="01", min_size=1, max_size=60)


def test_occurrences_frozen():
    assert occurrences("0", "0100101") == [0, 2, 3, 5]
    assert occurrences("aa", "aaa") == [0, 1]
    assert occurrences("ab", "ba") == []
    with pytest.raises(EmptyPattern):
        occurrences("", "01")


def test_return_words_frozen():
    assert return_words("0", "00100") == {"0", "01"}
    assert return_words("01", "0101101") == {"01", "011"}
    assert min_return_length("0", "00100") == 1
    with pytest.raises(InsufficientWindow):
        return_words("0010010", "00100100")  # single occurrence
    with pytest.raises(InsufficientWindow):
        min_return_length("111", "0101")


def test_thue_morse_prefix_gaps():
    # "01" occurs in TM at gaps never below 2
    assert min_return_length("01", TM256) == 2
    assert min_return_length("0110", TM256) == 4


def test_fractional_power_frozen():
    assert fractional_power("011", Fraction(5, 3)) == "01101"
    assert fractional_power("01", 3) == "010101"
    assert fractional_power("ab", Fraction(1, 2)) == "a"
    with pytest.raises(EmptyPattern):
        fractional_power("", 2)


def test_max_power_frozen():
    assert max_fractional_power("0101") == 2
    assert max_fractional_power("010") == Fraction(3, 2)
    assert max_fractional_power("01") == 1
    assert max_fractional_power(TM256) == 2


def test_max_power_witness_round_trip():
    w = max_power_witness("0110110")
    assert w.exponent == Fraction(7, 3)
    assert w.base == "011"
    assert w.position == 0
    assert w.factor == "0110110"


def test_word_counts_frozen():
    assert word_counts("0110", 2) == {"01": 1, "11": 1, "10": 1}
    assert word_counts("0000", 1) == {"0": 4}
    assert word_counts("01", 5) == {}
    counts = word_counts(TM256, 3)
    assert sum(counts.values()) == 254
    assert "000" not in counts and "111" not in counts


@given(binary1, binary)
def test_occurrences_match_oracle(pattern, text):
    assert occurrences(pattern, text) == naive_occurrences(pattern, text)


@given(binary1, binary)
def test_return_words_match_oracle(pattern, text):
    if len(naive_occurrences(pattern, text)) < 2:
        return
    assert return_words(pattern, text) == naive_return_words(pattern, text)
    assert min_return_length(pattern, text) == naive_min_gap(pattern, text)


@given(binary1)
@settings(max_examples=60)
def test_max_power_matches_oracle(text):
    assert max_fractional_power(text, cap=None) == naive_max_power(text)


@given(binary1, st.integers(min_value=1, max_value=4))
def test_power_witness_is_a_factor(text, _k):
    w = max_power_witness(text, cap=None)
    assert w.factor in text
    assert text[w.position : w.position + len(w.factor)] == w.factor


@given(binary1, st.integers(min_value=1, max_value=6))
def test_word_counts_total(text, length):
    counts = word_counts(text, length)
    expected = max(0, len(text) - length + 1)
    assert sum(counts.values()) == expected
    for w, c in counts.items():
        assert len(occurrences(w, text)) == c
