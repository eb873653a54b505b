import functools
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from richwords import (
    AlphabetMismatchError,
    NotAPrefixError,
    OrderRelation,
    Word,
    factors,
    is_palindrome,
    lex_compare,
    reversal,
    strip_prefix,
)

from helpers import W, all_words, lex_less_manual

letter_lists = st.lists(st.integers(min_value=0, max_value=2), max_size=30)


class TestWordBasics:
    def test_construction_validates_letters(self):
        with pytest.raises(ValueError):
            Word((0, 2), alphabet_size=2)
        with pytest.raises(ValueError):
            Word((0, -1), alphabet_size=2)
        with pytest.raises(ValueError):
            Word((), alphabet_size=0)
        with pytest.raises(ValueError):
            Word((), alphabet_size=11)

    def test_from_string_infers_alphabet(self):
        assert W("0102").alphabet_size == 3
        assert W("000").alphabet_size == 2
        assert W("").alphabet_size == 2
        assert W("0102", 4).alphabet_size == 4
        with pytest.raises(ValueError):
            W("012", 2)

    def test_string_round_trip(self):
        for text in ("", "0", "001001010", "0102"):
            assert str(W(text)) == text

    def test_slicing_and_concat(self):
        w = W("001001010")
        assert w[3:] == W("001010")
        assert w[0] == 0
        assert w[:3] + w[3:] == w
        with pytest.raises(AlphabetMismatchError):
            W("01") + W("012")

    def test_empty_word_permitted(self):
        assert len(Word()) == 0
        assert str(Word()) == ""


class TestLexCompare:
    def test_empty_precedes_zero(self):
        assert lex_compare(W(""), W("0")) is OrderRelation.LESS

    def test_equal(self):
        assert lex_compare(W("0102"), W("0102")) is OrderRelation.EQUAL

    def test_last_letter_decides(self):
        assert lex_compare(W("00100100"), W("00100101")) is OrderRelation.LESS

    def test_mismatched_alphabets_rejected(self):
        with pytest.raises(AlphabetMismatchError):
            lex_compare(W("00"), W("012"))

    def test_agrees_with_manual_comparison_exhaustively(self):
        words = [letters for letters in all_words(3, 5)]
        for u in words:
            for v in words:
                got = lex_compare(Word(u, 3), Word(v, 3))
                if lex_less_manual(u, v):
                    assert got is OrderRelation.LESS
                elif lex_less_manual(v, u):
                    assert got is OrderRelation.GREATER
                else:
                    assert got is OrderRelation.EQUAL

    def test_total_order_sorts_like_reference_key(self):
        # A comparator that sorts the full length <= 8 ternary set exactly
        # like the reference key is consistent as a total order on that set.
        words = [Word(letters, 3) for letters in all_words(3, 8)]

        def cmp(u, v):
            return lex_compare(u, v).value

        by_cmp = sorted(words, key=functools.cmp_to_key(cmp))
        by_key = sorted(words, key=lambda w: w.letters)
        assert by_cmp == by_key

    def test_proper_prefixes_compare_less(self):
        for letters in all_words(2, 10, min_len=1):
            w = Word(letters, 2)
            for i in range(len(letters)):
                assert lex_compare(w[:i], w) is OrderRelation.LESS
        for letters in all_words(3, 8, min_len=1):
            w = Word(letters, 3)
            for i in range(len(letters)):
                assert lex_compare(w[:i], w) is OrderRelation.LESS

    def test_dunder_comparisons(self):
        assert W("") < W("0") < W("00") < W("01") < W("1")
        assert W("01") <= W("01") >= W("01")


class TestReversal:
    def test_examples(self):
        assert reversal(W("")) == W("")
        assert reversal(W("011")) == W("110")
        assert reversal(W("00100")) == W("00100")

    @given(letter_lists)
    def test_involution_and_length(self, letters):
        w = Word(letters, 3)
        assert reversal(reversal(w)) == w
        assert len(reversal(w)) == len(w)


class TestPalindromes:
    def test_examples(self):
        assert is_palindrome(W("00100"))
        assert is_palindrome(W(""))
        assert not is_palindrome(W("001"))

    @given(letter_lists)
    def test_reversal_characterization(self, letters):
        w = Word(letters, 3)
        assert is_palindrome(w) == (w == reversal(w))


class TestStripPrefix:
    def test_examples(self):
        assert strip_prefix(W("001", 3), W("001001010", 3)) == W("001010", 3)
        assert strip_prefix(W(""), W("0101")) == W("0101")

    def test_not_a_prefix(self):
        with pytest.raises(NotAPrefixError):
            strip_prefix(W("0"), W("1"))

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            strip_prefix(W("0"), W("012"))

    def test_concatenation_inverse(self):
        for letters in all_words(2, 8):
            w = Word(letters, 2)
            for i in range(len(letters) + 1):
                assert w[:i] + strip_prefix(w[:i], w) == w


class TestFactors:
    def test_examples(self):
        assert factors(W("0102"), 1) == {W("0", 3), W("1", 3), W("2", 3)}
        assert factors(W("0011"), 2) == {W("00"), W("01"), W("11")}
        assert factors(W("0011"), 0) == {W("")}

    def test_range_errors(self):
        with pytest.raises(ValueError):
            factors(W("01"), 3)
        with pytest.raises(ValueError):
            factors(W("01"), -1)

    def test_count_bound_exhaustive(self):
        for letters in all_words(2, 12):
            w = Word(letters, 2)
            for k in range(len(letters) + 1):
                assert len(factors(w, k)) <= len(letters) - k + 1
