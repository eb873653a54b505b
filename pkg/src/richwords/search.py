"""Backtracking generation of lexicographically least words.

Predicates are incremental checkers with exact accept/retract pairs, so the
depth-first search never recomputes a property from scratch. Letters are
tried in ascending order, which is what makes the first word found the
lexicographically least one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .palindromes import Eertree
from .repetitions import FreenessPolicy
from .words import Word


class RichnessChecker:
    """Accepts a letter only while the word stays rich.

    A word is rich exactly when every eertree push created a palindrome, so
    the check is one push; retract is one pop.
    """

    name = "rich"

    def __init__(self):
        self._tree = Eertree()

    @property
    def depth(self) -> int:
        return len(self._tree)

    def accept(self, a: int) -> bool:
        return self._tree.push(a) == 1

    def retract(self) -> None:
        self._tree.pop()


class FreenessChecker:
    """Rejects a letter if the appended word gains a forbidden-exponent suffix.

    For each period p the checker keeps the length of the trailing run of
    positions matching their p-shift; the longest suffix of period p is that
    run plus p. An append updates every period in O(1); a journal of reset
    entries makes retraction exact. max_period caps the periods tracked
    (None tracks all of them).
    """

    def __init__(self, policy: FreenessPolicy, max_period: int | None = None):
        self.policy = policy
        self.name = f"free:{policy.bound}{'+' if policy.strict else ''}"
        self._num = policy.bound.numerator
        self._den = policy.bound.denominator
        self._strict = policy.strict
        self._cap = max_period
        self._word: list[int] = []
        self._runs = [0]  # _runs[p] = trailing match-run length for shift p
        self._journal: list[list[tuple[int, int]]] = []

    @property
    def depth(self) -> int:
        return len(self._word)

    def _period_limit(self, n: int) -> int:
        return n - 1 if self._cap is None else min(n - 1, self._cap)

    def accept(self, a: int) -> bool:
        word = self._word
        runs = self._runs
        word.append(a)
        n = len(word)
        pmax = self._period_limit(n)
        if len(runs) <= pmax:
            runs.append(0)
        num = self._num
        den = self._den
        strict = self._strict
        last = n - 1
        ok = True
        resets: list[tuple[int, int]] = []
        for p in range(1, pmax + 1):
            if word[last] == word[last - p]:
                r = runs[p] + 1
                runs[p] = r
                lhs = (r + p) * den
                rhs = num * p
                if lhs > rhs or (lhs == rhs and not strict):
                    ok = False
            else:
                r = runs[p]
                if r:
                    resets.append((p, r))
                    runs[p] = 0
        self._journal.append(resets)
        return ok

    def retract(self) -> None:
        word = self._word
        if not word:
            raise IndexError("retract on an empty checker")
        resets = self._journal.pop()
        runs = self._runs
        n = len(word)
        pmax = self._period_limit(n)
        last = n - 1
        for p in range(1, pmax + 1):
            if word[last] == word[last - p]:
                runs[p] -= 1
        for p, r in resets:
            runs[p] = r
        if n >= 2 and (self._cap is None or n - 1 <= self._cap):
            runs.pop()
        word.pop()


@dataclass
class SearchOutcome:
    """Result of a backtracking run.

    word is None when the search space was exhausted. max_backtrack_depth is
    the deepest node whose letters were all tried and rejected.
    """

    word: Word | None
    nodes_visited: int
    max_backtrack_depth: int

    @property
    def found(self) -> bool:
        return self.word is not None


def lex_least_of_length(n: int, alphabet_size: int, predicates) -> SearchOutcome:
    """The lexicographically least word of length exactly n passing all predicates.

    Depth-first search trying letters in ascending order. Predicates must be
    prefix-closed incremental checkers starting at depth 0; they are returned
    to depth 0 whether or not the search succeeds.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    preds = list(predicates)
    for p in preds:
        if getattr(p, "depth", 0) != 0:
            raise ValueError(f"predicate {p.name!r} is not at depth 0")
    word: list[int] = []
    tries = [0]
    nodes = 0
    deepest_dead = 0
    while True:
        depth = len(word)
        if depth == n:
            for _ in range(depth):
                for p in preds:
                    p.retract()
            return SearchOutcome(Word(tuple(word), alphabet_size), nodes, deepest_dead)
        a = tries[-1]
        if a >= alphabet_size:
            if depth == 0:
                return SearchOutcome(None, nodes, deepest_dead)
            if depth > deepest_dead:
                deepest_dead = depth
            tries.pop()
            word.pop()
            for p in preds:
                p.retract()
            tries[-1] += 1
            continue
        nodes += 1
        called = 0
        ok = True
        for p in preds:
            called += 1
            if not p.accept(a):
                ok = False
                break
        if ok:
            word.append(a)
            tries.append(0)
        else:
            for p in preds[:called]:
                p.retract()
            tries[-1] += 1


def lex_least_extendable(
    n: int, alphabet_size: int, predicates, lookahead: int
) -> SearchOutcome:
    """The least length-n word extendable to length n+lookahead under the predicates.

    Growing the lookahead filters out ever longer dead ends, so the output
    approximates (from below, non-decreasingly) the length-n prefix of the
    lexicographically least infinite word with the property.
    """
    if lookahead < 0:
        raise ValueError("lookahead must be non-negative")
    outcome = lex_least_of_length(n + lookahead, alphabet_size, predicates)
    if outcome.word is not None:
        return SearchOutcome(
            outcome.word[:n], outcome.nodes_visited, outcome.max_backtrack_depth
        )
    return outcome


def check_recurrence(w: Word, factor_len: int, probe_len: int) -> bool:
    """True iff every length-factor_len factor inside the first probe_len
    letters of w occurs at least twice in all of w (occurrences may overlap).

    Finite evidence for recurrence, not a proof.
    """
    n = len(w)
    if probe_len > n:
        raise ValueError(f"probe length {probe_len} exceeds |w|={n}")
    if not 1 <= factor_len <= probe_len:
        raise ValueError(
            f"factor length {factor_len} must be in 1..probe length {probe_len}"
        )
    data = w.as_bytes()
    counts = Counter(data[i: i + factor_len] for i in range(n - factor_len + 1))
    needed = {data[i: i + factor_len] for i in range(probe_len - factor_len + 1)}
    return all(counts[f] >= 2 for f in needed)
