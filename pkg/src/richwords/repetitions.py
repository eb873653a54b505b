"""Exact-rational repetition analysis.

Maximal factor exponents, freeness predicates, suffix extension exponents
for incremental checking, and the classical repetition-threshold constants.
All exponent comparisons are exact (integer cross-multiplication via
Fraction); floats appear only in human-facing reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .words import Word

_NUMPY_MIN_LENGTH = 256  # below this, plain loops beat per-period array overhead


@dataclass(frozen=True)
class ExponentReport:
    """The maximal exponent among all factors, with a witness.

    The witness factor w[start : start+length] has minimal period
    witness_period and exponent length/period equal to max_exponent. Ties
    are broken by smallest start, then smallest period.
    """

    max_exponent: Fraction
    witness_start: int
    witness_length: int
    witness_period: int


@dataclass(frozen=True)
class FreenessPolicy:
    """Which exponents a word may not contain.

    strict=False forbids factors of exponent >= bound (the word must be
    "bound-free"); strict=True forbids only exponents > bound
    ("bound+-free").
    """

    bound: Fraction
    strict: bool = False

    def __post_init__(self):
        if self.bound <= 1:
            raise ValueError("freeness bound must exceed 1")

    @classmethod
    def parse(cls, text: str, strict: bool = False) -> "FreenessPolicy":
        return cls(Fraction(text), strict)

    def forbids(self, exponent: Fraction) -> bool:
        if self.strict:
            return exponent > self.bound
        return exponent >= self.bound

    def describe(self) -> str:
        return f"{self.bound}{'+' if self.strict else ''}-free"


def _longest_run_numpy(arr: np.ndarray, p: int) -> tuple[int, int]:
    # Longest run of positions matching their p-shift, and where it starts.
    eq = arr[p:] == arr[:-p]
    m = eq.size
    if m == 0:
        return 0, 0
    bad = np.flatnonzero(~eq)
    if bad.size == 0:
        return m, 0
    lengths = np.empty(bad.size + 1, dtype=np.int64)
    lengths[0] = bad[0]
    if bad.size > 1:
        lengths[1:-1] = np.diff(bad) - 1
    lengths[-1] = m - 1 - bad[-1]
    starts = np.empty_like(lengths)
    starts[0] = 0
    starts[1:] = bad + 1
    k = int(np.argmax(lengths))  # argmax takes the first maximum: smallest start
    return int(lengths[k]), int(starts[k])


def _longest_run_python(letters: tuple[int, ...], p: int) -> tuple[int, int]:
    best = 0
    best_start = 0
    run = 0
    start = 0
    for i in range(len(letters) - p):
        if letters[i] == letters[i + p]:
            if run == 0:
                start = i
            run += 1
            if run > best:
                best = run
                best_start = start
        else:
            run = 0
    return best, best_start


def max_exponent(w: Word) -> ExponentReport:
    """Maximal |z|/per(z) over all factors z of w, with minimal periods.

    Per-period scan: the longest factor with period p is the longest run of
    positions agreeing with their p-shift, plus p. Periods stop as soon as
    even the whole word could not beat the best exponent found.
    """
    letters = w.letters
    n = len(letters)
    if n == 0:
        raise ValueError("the empty word has no factor exponent")
    arr = np.frombuffer(w.as_bytes(), dtype=np.int8) if n >= _NUMPY_MIN_LENGTH else None
    b_num, b_den, b_start = 1, 1, 0  # any single letter is a 1-power
    for p in range(1, n):
        if n * b_den < b_num * p:
            break
        if arr is not None:
            run, start = _longest_run_numpy(arr, p)
        else:
            run, start = _longest_run_python(letters, p)
        length = run + p
        lhs = length * b_den
        rhs = b_num * p
        if lhs > rhs or (lhs == rhs and start < b_start):
            b_num, b_den, b_start = length, p, start
    return ExponentReport(Fraction(b_num, b_den), b_start, b_num, b_den)


def max_exponent_bruteforce(w: Word) -> ExponentReport:
    """Brute force over all (start, length, period) triples.

    Independent oracle for max_exponent: same tie rules, no shared scanning
    machinery.
    """
    data = w.as_bytes()
    n = len(data)
    if n == 0:
        raise ValueError("the empty word has no factor exponent")
    b_num, b_den, b_start, b_len, b_per = 1, 1, 0, 1, 1
    for start in range(n):
        for length in range(1, n - start + 1):
            for period in range(1, length + 1):
                if data[start + period: start + length] != data[start: start + length - period]:
                    continue
                lhs = length * b_den
                rhs = b_num * period
                better = lhs > rhs or (
                    lhs == rhs and (start, period) < (b_start, b_per)
                )
                if better:
                    b_num, b_den, b_start, b_len, b_per = length, period, start, length, period
    return ExponentReport(Fraction(b_num, b_den), b_start, b_len, b_per)


def is_free(w: Word, policy: FreenessPolicy) -> bool:
    """True iff no factor of w has an exponent the policy forbids.

    The empty word is free. Periods beyond |w|/bound cannot offend and are
    skipped; the scan stops at the first violation.
    """
    letters = w.letters
    n = len(letters)
    if n == 0:
        return True
    num = policy.bound.numerator
    den = policy.bound.denominator
    strict = policy.strict
    arr = np.frombuffer(w.as_bytes(), dtype=np.int8) if n >= _NUMPY_MIN_LENGTH else None
    for p in range(1, n):
        top = n * den  # largest conceivable length at this period is n
        if top < num * p or (strict and top == num * p):
            break
        if arr is not None:
            run, _ = _longest_run_numpy(arr, p)
        else:
            run, _ = _longest_run_python(letters, p)
        lhs = (run + p) * den
        rhs = num * p
        if lhs > rhs or (lhs == rhs and not strict):
            return False
    return True


def extension_exponent(w: Word) -> Fraction:
    """Maximal exponent among factors of w ending at its last position.

    This is the only quantity that can newly violate freeness after a
    one-letter append, so it is what incremental checkers recompute.
    """
    letters = w.letters
    n = len(letters)
    if n == 0:
        raise ValueError("the empty word has no extension exponent")
    b_num, b_den = 1, 1
    last = n - 1
    for p in range(1, n):
        if n * b_den < b_num * p:
            break
        r = 0
        limit = n - p
        while r < limit and letters[last - r] == letters[last - p - r]:
            r += 1
        length = r + p
        if length * b_den > b_num * p:
            b_num, b_den = length, p
    return Fraction(b_num, b_den)


def dejean_threshold(n: int) -> Fraction:
    """The repetition threshold of the n-letter alphabet."""
    if n < 2:
        raise ValueError("repetition thresholds start at the binary alphabet")
    if n == 3:
        return Fraction(7, 4)
    if n == 4:
        return Fraction(7, 5)
    return Fraction(n, n - 1)


def rich_threshold() -> tuple[Fraction, float]:
    """The working rational bound for binary rich words, and the true threshold.

    Exponent tests use the rational 14/5; the irrational threshold
    2 + sqrt(2)/2 is returned for reporting only and never enters exact
    comparisons.
    """
    return Fraction(14, 5), 2 + math.sqrt(2) / 2
