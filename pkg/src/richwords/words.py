"""Finite words over small integer alphabets, with lexicographic order.

Letters are plain integers in 0..alphabet_size-1. Words render as digit
strings ("001001010"); the empty word renders as "".
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator

MAX_ALPHABET = 10  # letters must render as single digits '0'..'9'


class AlphabetMismatchError(ValueError):
    """Operands over different alphabets were mixed."""


class NotAPrefixError(ValueError):
    """Prefix removal was requested for a non-prefix."""


class OrderRelation(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Word:
    """Immutable finite word over {0, ..., alphabet_size - 1}.

    Words are value objects: hashable and comparable by content. The order
    is lexicographic with a proper prefix preceding its extensions, so the
    empty word precedes everything else.
    """

    __slots__ = ("letters", "alphabet_size")

    def __init__(self, letters: Iterable[int] = (), alphabet_size: int = 2):
        letters = tuple(letters)
        if not 1 <= alphabet_size <= MAX_ALPHABET:
            raise ValueError(
                f"alphabet size must be in 1..{MAX_ALPHABET}, got {alphabet_size}"
            )
        for a in letters:
            if not 0 <= a < alphabet_size:
                raise ValueError(
                    f"letter {a!r} out of range for alphabet of size {alphabet_size}"
                )
        self.letters = letters
        self.alphabet_size = alphabet_size

    @classmethod
    def _unsafe(cls, letters: tuple[int, ...], alphabet_size: int) -> "Word":
        # Internal fast path: the caller guarantees the letters are valid.
        w = object.__new__(cls)
        w.letters = letters
        w.alphabet_size = alphabet_size
        return w

    @classmethod
    def from_string(cls, text: str, alphabet_size: int | None = None) -> "Word":
        """Parse a digit string; whitespace is ignored.

        Without an explicit alphabet size, the smallest plausible one is
        inferred (at least 2, so "00" parses as a binary word).
        """
        digits = "".join(text.split())
        letters = tuple(int(c) for c in digits)
        if alphabet_size is None:
            alphabet_size = max(max(letters, default=1) + 1, 2)
        return cls(letters, alphabet_size)

    def as_bytes(self) -> bytes:
        """Letters packed one per byte (letters are < 10, so this is lossless)."""
        return bytes(self.letters)

    def startswith(self, prefix: "Word") -> bool:
        return self.letters[: len(prefix.letters)] == prefix.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word._unsafe(self.letters[key], self.alphabet_size)
        return self.letters[key]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet_size != other.alphabet_size:
            raise AlphabetMismatchError(
                f"cannot concatenate words over alphabets of size "
                f"{self.alphabet_size} and {other.alphabet_size}"
            )
        return Word._unsafe(self.letters + other.letters, self.alphabet_size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return (
            self.letters == other.letters
            and self.alphabet_size == other.alphabet_size
        )

    def __hash__(self) -> int:
        return hash((self.letters, self.alphabet_size))

    def __lt__(self, other: "Word") -> bool:
        return lex_compare(self, other) is OrderRelation.LESS

    def __le__(self, other: "Word") -> bool:
        return lex_compare(self, other) is not OrderRelation.GREATER

    def __gt__(self, other: "Word") -> bool:
        return lex_compare(self, other) is OrderRelation.GREATER

    def __ge__(self, other: "Word") -> bool:
        return lex_compare(self, other) is not OrderRelation.LESS

    def __str__(self) -> str:
        return "".join(map(str, self.letters))

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, alphabet_size={self.alphabet_size})"


def lex_compare(u: Word, v: Word) -> OrderRelation:
    """Compare two words over the same alphabet.

    A proper prefix compares LESS than its extensions (in particular the
    empty word precedes every non-empty word); otherwise the first
    differing letter decides. Python tuple comparison implements exactly
    this rule.
    """
    if u.alphabet_size != v.alphabet_size:
        raise AlphabetMismatchError(
            f"cannot compare words over alphabets of size "
            f"{u.alphabet_size} and {v.alphabet_size}"
        )
    if u.letters == v.letters:
        return OrderRelation.EQUAL
    return OrderRelation.LESS if u.letters < v.letters else OrderRelation.GREATER


def reversal(w: Word) -> Word:
    """The word read backwards."""
    return Word._unsafe(w.letters[::-1], w.alphabet_size)


def is_palindrome(w: Word) -> bool:
    """True iff w equals its reversal; the empty word is a palindrome."""
    return w.letters == w.letters[::-1]


def strip_prefix(p: Word, w: Word) -> Word:
    """Remove prefix p from w, returning the remainder.

    Raises NotAPrefixError if p is not a prefix of w.
    """
    if p.alphabet_size != w.alphabet_size:
        raise AlphabetMismatchError(
            f"prefix and word live over alphabets of size "
            f"{p.alphabet_size} and {w.alphabet_size}"
        )
    if w.letters[: len(p.letters)] != p.letters:
        raise NotAPrefixError(f"{str(p)!r} is not a prefix of {str(w)!r}")
    return Word._unsafe(w.letters[len(p.letters):], w.alphabet_size)


def factors(w: Word, length: int) -> set[Word]:
    """All distinct factors of w of the given length.

    For length 0 the result is {empty word}.
    """
    if not 0 <= length <= len(w):
        raise ValueError(f"factor length {length} out of range for |w|={len(w)}")
    letters = w.letters
    n = w.alphabet_size
    return {
        Word._unsafe(letters[i: i + length], n)
        for i in range(len(letters) - length + 1)
    }
