"""Palindromic structure of words.

An eertree (palindromic tree) with exact rollback, richness reports,
complete-return extraction, and the naive enumerations used as independent
oracles for all of the above.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, is_palindrome


class _Node:
    __slots__ = ("length", "link", "edges", "first_end")

    def __init__(self, length: int, link: int, first_end: int):
        self.length = length
        self.link = link
        self.edges: dict[int, int] = {}
        self.first_end = first_end


class Eertree:
    """Palindromic tree over the word pushed so far.

    One node per distinct non-empty palindromic factor, plus two roots of
    lengths -1 and 0. Each push appends one letter and creates at most one
    node (only the longest new palindromic suffix can be new); pop() undoes
    the latest push exactly, replaying a per-push journal entry.
    """

    __slots__ = ("_nodes", "_text", "_last", "_journal")

    def __init__(self):
        self._nodes = [_Node(-1, 0, -1), _Node(0, 0, -1)]
        self._text: list[int] = []
        self._last = 1  # node of the longest palindromic suffix of the text
        self._journal: list[tuple[bool, int, int, int]] = []

    def __len__(self) -> int:
        return len(self._text)

    @property
    def text(self) -> tuple[int, ...]:
        return tuple(self._text)

    @property
    def palindrome_count(self) -> int:
        """Number of distinct non-empty palindromic factors of the text."""
        return len(self._nodes) - 2

    def _extendable(self, node_id: int, pos: int) -> bool:
        # The palindrome at node_id extends by text[pos] iff the mirrored
        # position before it exists and holds the same letter. The length -1
        # root always extends (mirror position is pos itself).
        i = pos - self._nodes[node_id].length - 1
        return i >= 0 and self._text[i] == self._text[pos]

    def push(self, a: int) -> int:
        """Append a letter; return how many new palindromic factors appeared (0 or 1)."""
        nodes = self._nodes
        text = self._text
        pos = len(text)
        text.append(a)
        cur = self._last
        while not self._extendable(cur, pos):
            cur = nodes[cur].link
        prev_last = self._last
        child = nodes[cur].edges.get(a)
        if child is not None:
            self._last = child
            self._journal.append((False, prev_last, -1, -1))
            return 0
        if nodes[cur].length == -1:
            link = 1  # a single letter's longest proper palindromic suffix is empty
        else:
            probe = nodes[cur].link
            while not self._extendable(probe, pos):
                probe = nodes[probe].link
            link = nodes[probe].edges[a]
        new_id = len(nodes)
        nodes.append(_Node(nodes[cur].length + 2, link, pos))
        nodes[cur].edges[a] = new_id
        self._last = new_id
        self._journal.append((True, prev_last, cur, a))
        return 1

    def pop(self) -> None:
        """Undo the latest push, restoring the previous tree exactly."""
        if not self._text:
            raise IndexError("pop from empty eertree")
        created, prev_last, parent, letter = self._journal.pop()
        if created:
            self._nodes.pop()
            del self._nodes[parent].edges[letter]
        self._last = prev_last
        self._text.pop()

    def snapshot(self) -> tuple:
        """Canonical image of the full observable state, for differential tests."""
        return (
            tuple(self._text),
            self._last,
            tuple(
                (n.length, n.link, tuple(sorted(n.edges.items())), n.first_end)
                for n in self._nodes
            ),
        )


@dataclass(frozen=True)
class RichnessReport:
    """Palindromic richness of a finite word.

    A word of length n holds at most n distinct non-empty palindromic
    factors; it is rich when it attains that bound, equivalently when every
    letter appended while reading it contributed a new palindrome.
    """

    is_rich: bool
    palindrome_count: int
    length: int
    first_deficient_prefix_length: int | None


def is_rich(w: Word) -> RichnessReport:
    """Build an eertree over w and report its richness."""
    tree = Eertree()
    first_bad = None
    for i, a in enumerate(w.letters):
        if tree.push(a) == 0 and first_bad is None:
            first_bad = i + 1
    return RichnessReport(
        is_rich=first_bad is None,
        palindrome_count=tree.palindrome_count,
        length=len(w),
        first_deficient_prefix_length=first_bad,
    )


@dataclass(frozen=True)
class ReturnWord:
    """A factor containing exactly two occurrences of a palindromic pivot,
    one as its prefix and one as its suffix."""

    pivot: Word
    occurrence: Word
    start_position: int


def complete_return(w: Word, p: Word) -> list[ReturnWord]:
    """All complete returns to the palindromic factor p inside w.

    Consecutive occurrences of p delimit the returns; the list is ordered by
    start position with duplicate contents removed.
    """
    if len(p) == 0:
        raise ValueError("the pivot must be a non-empty palindrome")
    if not is_palindrome(p):
        raise ValueError(f"pivot {str(p)!r} is not a palindrome")
    hay = w.as_bytes()
    needle = p.as_bytes()
    occurrences = []
    i = hay.find(needle)
    while i != -1:
        occurrences.append(i)
        i = hay.find(needle, i + 1)
    if not occurrences:
        raise ValueError(f"pivot {str(p)!r} does not occur in the word")
    returns: list[ReturnWord] = []
    seen: set[tuple[int, ...]] = set()
    for start, nxt in zip(occurrences, occurrences[1:]):
        occ = w[start: nxt + len(p)]
        if occ.letters not in seen:
            seen.add(occ.letters)
            returns.append(ReturnWord(p, occ, start))
    return returns


def palindromic_factors_naive(w: Word) -> set[Word]:
    """Distinct non-empty palindromic factors by direct enumeration.

    Quadratic; kept deliberately independent of the eertree so the two can
    cross-check each other.
    """
    data = w.as_bytes()
    n = len(data)
    found: set[bytes] = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            s = data[i:j]
            if s == s[::-1]:
                found.add(s)
    return {Word._unsafe(tuple(s), w.alphabet_size) for s in found}


def check_glen_characterization(w: Word) -> bool:
    """True iff every complete return to every palindromic factor of w is a palindrome.

    This is the return-word characterization of richness, so the result must
    agree with is_rich(w); the implementation here scans occurrences naively
    and never touches the eertree.
    """
    data = w.as_bytes()
    n = len(data)
    pals: set[bytes] = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            s = data[i:j]
            if s == s[::-1]:
                pals.add(s)
    for p in pals:
        prev = data.find(p)
        while True:
            nxt = data.find(p, prev + 1)
            if nxt == -1:
                break
            seg = data[prev: nxt + len(p)]
            if seg != seg[::-1]:
                return False
            prev = nxt
    return True
