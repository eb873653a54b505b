"""Shared test helpers: independent string-level oracles.

Everything here works on plain Python strings so it shares no code with the
package internals it cross-checks.
"""

from itertools import product

from richwords import Word

# The substitution tables, frozen as plain string rules.
F_RULES = {"0": "0", "1": "01", "2": "011"}
G_RULES = {"0": "011", "1": "0121", "2": "012121"}
H_RULES = {"0": "01", "1": "02", "2": "022"}


def W(text: str, alphabet_size: int | None = None) -> Word:
    return Word.from_string(text, alphabet_size)


def apply_rules(rules: dict[str, str], s: str) -> str:
    return "".join(rules[c] for c in s)


def h_fixed_str(n: int) -> str:
    """Prefix of the generator fixed point by direct string iteration."""
    s = "0"
    while len(s) < n:
        s = apply_rules(H_RULES, s)
    return s[:n]


def v_str(n: int) -> str:
    """Oracle for the recurrent backbone prefix, by string expansion."""
    if n == 0:
        return ""
    k = n
    while True:
        out = apply_rules(F_RULES, apply_rules(G_RULES, h_fixed_str(k)))
        if len(out) >= n:
            return out[:n]
        k *= 2


def ell_str(n: int) -> str:
    """Oracle for the least rich threshold word prefix, by string expansion."""
    if n == 0:
        return ""
    k = max(1, n)
    while True:
        out = apply_rules(F_RULES, "01" + apply_rules(G_RULES, h_fixed_str(k)))
        if len(out) >= n:
            return out[:n]
        k *= 2


def lex_less_manual(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
    """First-difference comparison, written out longhand: strip the common
    prefix; a proper prefix is less; otherwise compare the first letters."""
    i = 0
    while i < len(u) and i < len(v) and u[i] == v[i]:
        i += 1
    if i == len(u):
        return i < len(v)  # u is a (proper) prefix of v
    if i == len(v):
        return False
    return u[i] < v[i]


def all_words(alphabet_size: int, max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        for letters in product(range(alphabet_size), repeat=n):
            yield letters


# Smallest binary words (by length, then lexicographically) that are not
# rich; all have length 8 and lose a palindrome at the final letter.
MINIMAL_NON_RICH = ("00101100", "00110100", "11001011", "11010011")
