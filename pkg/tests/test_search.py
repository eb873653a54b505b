from fractions import Fraction
from itertools import product

import pytest

from richwords import (
    FreenessChecker,
    FreenessPolicy,
    RichnessChecker,
    Word,
    build_ell,
    check_recurrence,
    extension_exponent,
    is_free,
    is_rich,
    lex_least_extendable,
    lex_least_of_length,
    max_exponent_bruteforce,
    palindromic_factors_naive,
)

from helpers import W, all_words

RICH_BOUND = Fraction(14, 5)


def good_checkers():
    return [RichnessChecker(), FreenessChecker(FreenessPolicy(RICH_BOUND))]


def cube_checker():
    return [FreenessChecker(FreenessPolicy(Fraction(3)))]


def oracle_good(w: Word) -> bool:
    if len(palindromic_factors_naive(w)) != len(w):
        return False
    return max_exponent_bruteforce(w).max_exponent < RICH_BOUND


class TestCheckers:
    def test_richness_checker_follows_oracle(self):
        for letters in all_words(2, 10, min_len=1):
            checker = RichnessChecker()
            for i, a in enumerate(letters):
                ok = checker.accept(a)
                prefix = Word(letters[: i + 1], 2)
                assert ok == is_rich(prefix).is_rich
                if not ok:
                    break
            # unwind completely
            while checker.depth:
                checker.retract()

    def test_freeness_checker_follows_oracle(self):
        policy = FreenessPolicy(RICH_BOUND)
        for letters in all_words(2, 10, min_len=1):
            checker = FreenessChecker(policy)
            for i, a in enumerate(letters):
                ok = checker.accept(a)
                prefix = Word(letters[: i + 1], 2)
                assert ok == (not policy.forbids(extension_exponent(prefix)))
                if not ok:
                    break
            while checker.depth:
                checker.retract()

    def test_freeness_checker_retract_is_exact(self):
        import random

        rng = random.Random(41)
        policy = FreenessPolicy(RICH_BOUND)
        checker = FreenessChecker(policy)
        word: list[int] = []
        for _ in range(3000):
            if word and rng.random() < 0.45:
                checker.retract()
                word.pop()
            else:
                a = rng.randrange(2)
                checker.accept(a)
                word.append(a)
            if len(word) % 53 == 0:
                replay = FreenessChecker(policy)
                for a in word:
                    replay.accept(a)
                assert replay._runs == checker._runs
                assert replay._word == checker._word

    def test_period_cap_limits_tracking(self):
        square = FreenessPolicy(Fraction(2))
        capped = FreenessChecker(square, max_period=1)
        # 0101 ends with the period-2 square (01)^2, beyond a cap of 1
        for a in (0, 1, 0, 1):
            assert capped.accept(a)
        full = FreenessChecker(square)
        for a in (0, 1, 0):
            assert full.accept(a)
        assert not full.accept(1)
        while capped.depth:
            capped.retract()
        while full.depth:
            full.retract()

    def test_retract_on_empty_raises(self):
        with pytest.raises(IndexError):
            FreenessChecker(FreenessPolicy(Fraction(3))).retract()

    def test_checker_names(self):
        assert RichnessChecker().name == "rich"
        assert FreenessChecker(FreenessPolicy(Fraction(14, 5))).name == "free:14/5"
        assert FreenessChecker(FreenessPolicy(Fraction(14, 5), strict=True)).name == "free:14/5+"


class TestLexLeastOfLength:
    def test_least_cubefree_length_8(self):
        out = lex_least_of_length(8, 2, cube_checker())
        assert str(out.word) == "00100100"

    def test_zero_length(self):
        out = lex_least_of_length(0, 2, [])
        assert out.word == W("")

    def test_length_9_is_not_an_extension_of_length_8(self):
        out = lex_least_of_length(9, 2, cube_checker())
        assert out.found
        assert not str(out.word).startswith("00100100")

    def test_no_predicates_gives_zeros(self):
        out = lex_least_of_length(7, 2, [])
        assert str(out.word) == "0000000"

    def test_matches_bruteforce_enumeration_cubefree(self):
        policy = FreenessPolicy(Fraction(3))
        for n in range(1, 12):
            expected = min(
                (Word(ls, 2) for ls in product((0, 1), repeat=n)
                 if max_exponent_bruteforce(Word(ls, 2)).max_exponent < Fraction(3)),
                default=None,
            )
            out = lex_least_of_length(n, 2, [FreenessChecker(policy)])
            assert out.word == expected

    def test_matches_bruteforce_enumeration_good(self):
        for n in range(1, 12):
            expected = min(
                (Word(ls, 2) for ls in product((0, 1), repeat=n)
                 if oracle_good(Word(ls, 2))),
                default=None,
            )
            out = lex_least_of_length(n, 2, good_checkers())
            assert out.word == expected

    def test_exhaustion_is_a_value(self):
        # no binary word of length 4 avoids squares
        out = lex_least_of_length(4, 2, [FreenessChecker(FreenessPolicy(Fraction(2)))])
        assert not out.found
        assert out.word is None
        assert out.nodes_visited > 0

    def test_checker_integrity_after_search(self):
        checkers = good_checkers()
        lex_least_of_length(30, 2, checkers)
        assert all(c.depth == 0 for c in checkers)
        checkers = [FreenessChecker(FreenessPolicy(Fraction(2)))]
        lex_least_of_length(6, 2, checkers)  # exhausts
        assert all(c.depth == 0 for c in checkers)

    def test_unbalanced_checker_rejected(self):
        checker = RichnessChecker()
        checker.accept(0)
        with pytest.raises(ValueError):
            lex_least_of_length(3, 2, [checker])


class TestLexLeastExtendable:
    def test_cubefree_length_9(self):
        out = lex_least_extendable(9, 2, cube_checker(), 10)
        assert str(out.word) == "001001010"

    def test_good_length_9(self):
        out = lex_least_extendable(9, 2, good_checkers(), 3)
        assert str(out.word) == "001001010"

    def test_lookahead_zero_is_plain_search(self):
        a = lex_least_extendable(8, 2, cube_checker(), 0)
        b = lex_least_of_length(8, 2, cube_checker())
        assert a.word == b.word

    def test_monotone_in_lookahead(self):
        outputs = []
        for lookahead in (0, 10, 20, 40):
            out = lex_least_extendable(60, 2, good_checkers(), lookahead)
            assert out.found
            outputs.append(out.word)
        for small, large in zip(outputs, outputs[1:]):
            assert small <= large

    def test_prefix_stability_and_agreement(self):
        # Horizon 170 outlives every dead end starting below position 80
        # (the deepest, at position 70, dies at depth 232 <= 80 + 170), so
        # consecutive outputs are prefixes of each other and of the
        # constructed word.
        previous = None
        for n in range(1, 81):
            out = lex_least_extendable(n, 2, good_checkers(), 170)
            assert out.found
            assert out.word == build_ell(n)
            if previous is not None:
                assert out.word.startswith(previous)
            previous = out.word

    def test_lookahead_60_is_too_short_at_length_100(self):
        # The wrong turn at position 70 stays rich and 14/5-free for at
        # least 90 more letters (checked here from scratch, without the
        # incremental machinery), so a 160-letter horizon cannot reject it.
        ell = build_ell(400)
        policy = FreenessPolicy(RICH_BOUND)
        least160 = lex_least_of_length(160, 2, good_checkers())
        assert least160.found
        assert least160.word.letters[:70] == ell.letters[:70]
        assert least160.word[70] == 0 and ell[70] == 1
        assert is_rich(least160.word).is_rich
        assert is_free(least160.word, policy)
        out = lex_least_extendable(100, 2, good_checkers(), 60)
        assert out.word != build_ell(100)

    def test_validated_lookahead_reproduces_the_least_word(self):
        out = lex_least_extendable(100, 2, good_checkers(), 150)
        assert out.word == build_ell(100)

    def test_negative_lookahead_rejected(self):
        with pytest.raises(ValueError):
            lex_least_extendable(5, 2, [], -1)


class TestRecurrenceCheck:
    def test_whole_word_never_recurs(self):
        w = W("0011010")
        assert not check_recurrence(w, len(w), len(w))

    def test_simple_positive(self):
        assert check_recurrence(W("0101"), 2, 2)

    def test_simple_negative(self):
        assert not check_recurrence(W("0110"), 2, 2)  # 01 occurs once

    def test_range_validation(self):
        with pytest.raises(ValueError):
            check_recurrence(W("0101"), 2, 5)
        with pytest.raises(ValueError):
            check_recurrence(W("0101"), 3, 2)
        with pytest.raises(ValueError):
            check_recurrence(W("0101"), 0, 2)

    def test_overlapping_occurrences_count(self):
        # 000 occurs twice in 0000 only via overlap
        assert check_recurrence(W("0000"), 3, 3)
