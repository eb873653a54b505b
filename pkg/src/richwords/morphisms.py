"""Morphisms between free monoids.

Application, composition, iteration to fixed-point prefixes, exhaustive
order-preservation testing, and preimage decoding. The three standard
substitutions used throughout the package live in the STANDARD registry.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .words import MAX_ALPHABET, AlphabetMismatchError, Word


class CubeDetectedError(ValueError):
    """A binary word begins with 111, so no run-length header exists."""


class Morphism:
    """A non-erasing map from letters to words, extended by concatenation.

    The source alphabet is {0, ..., len(images)-1}; the target alphabet is
    inferred from the letters appearing in the images unless given.
    """

    __slots__ = ("source_alphabet_size", "target_alphabet_size", "images", "name")

    def __init__(
        self,
        images: Sequence[Word | str | Iterable[int]],
        target_alphabet_size: int | None = None,
        name: str | None = None,
    ):
        rules = []
        for image in images:
            if isinstance(image, Word):
                rules.append(image.letters)
            elif isinstance(image, str):
                rules.append(tuple(int(c) for c in image))
            else:
                rules.append(tuple(image))
        if not rules:
            raise ValueError("a morphism needs at least one image")
        if any(len(r) == 0 for r in rules):
            raise ValueError("morphism must be non-erasing: empty image found")
        top = max(max(r) for r in rules)
        if target_alphabet_size is None:
            target_alphabet_size = top + 1
        elif top >= target_alphabet_size:
            raise ValueError(
                f"image letter {top} out of range for target alphabet of size "
                f"{target_alphabet_size}"
            )
        if target_alphabet_size > MAX_ALPHABET or len(rules) > MAX_ALPHABET:
            raise ValueError(f"alphabets are limited to {MAX_ALPHABET} letters")
        self.source_alphabet_size = len(rules)
        self.target_alphabet_size = target_alphabet_size
        self.images = tuple(
            Word._unsafe(r, target_alphabet_size) for r in rules
        )
        self.name = name

    @classmethod
    def identity(cls, alphabet_size: int) -> "Morphism":
        return cls(
            [Word((a,), alphabet_size) for a in range(alphabet_size)],
            target_alphabet_size=alphabet_size,
            name="id",
        )

    @classmethod
    def from_text(cls, text: str, name: str | None = None) -> "Morphism":
        """Parse the one-rule-per-line format, e.g. "0 -> 011"."""
        rules: dict[int, str] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if "->" not in line:
                raise ValueError(f"bad morphism rule {line!r}: expected 'letter -> image'")
            lhs, rhs = (part.strip() for part in line.split("->", 1))
            letter = int(lhs)
            if letter in rules:
                raise ValueError(f"duplicate rule for letter {letter}")
            rules[letter] = rhs
        if sorted(rules) != list(range(len(rules))):
            raise ValueError("rules must cover letters 0..n-1 exactly once each")
        return cls([rules[a] for a in range(len(rules))], name=name)

    def to_text(self) -> str:
        return "\n".join(f"{a} -> {img}" for a, img in enumerate(self.images))

    def image(self, a: int) -> Word:
        if not 0 <= a < self.source_alphabet_size:
            raise AlphabetMismatchError(
                f"letter {a} out of range for source alphabet of size "
                f"{self.source_alphabet_size}"
            )
        return self.images[a]

    def apply(self, w: Word) -> Word:
        """Concatenation of the letter images, in order."""
        if w.alphabet_size > self.source_alphabet_size:
            for a in w.letters:
                if a >= self.source_alphabet_size:
                    raise AlphabetMismatchError(
                        f"letter {a} out of range for source alphabet of size "
                        f"{self.source_alphabet_size}"
                    )
        images = [img.letters for img in self.images]
        out: list[int] = []
        for a in w.letters:
            out.extend(images[a])
        return Word._unsafe(tuple(out), self.target_alphabet_size)

    def is_prolongable(self, a: int) -> bool:
        """True iff the image of a starts with a and is at least two letters long."""
        img = self.image(a).letters
        return len(img) >= 2 and img[0] == a

    def decode(self, w: Word) -> "DecodeResult":
        """Factor w into whole letter images plus a trailing residue.

        The residue is a proper prefix of some image (possibly empty). Each
        offset of w is explored once (memoized reachability), trying longer
        images first; among valid factorizations the one decoding the most
        of w wins. When no factorization works at all, the result carries
        the furthest offset reachable by whole images.
        """
        tn = self.target_alphabet_size
        if w.alphabet_size > tn:
            for a in w.letters:
                if a >= tn:
                    raise AlphabetMismatchError(
                        f"letter {a} out of range for target alphabet of size {tn}"
                    )
        data = w.as_bytes()
        n = len(data)
        imgs = sorted(
            ((img.as_bytes(), letter) for letter, img in enumerate(self.images)),
            key=lambda t: (-len(t[0]), t[1]),
        )
        reached = [False] * (n + 1)
        parent: list[tuple[int, int] | None] = [None] * (n + 1)
        reached[0] = True
        for i in range(n + 1):
            if not reached[i]:
                continue
            for ib, letter in imgs:
                j = i + len(ib)
                if j <= n and not reached[j] and data[i:j] == ib:
                    reached[j] = True
                    parent[j] = (i, letter)
        for i in range(n, -1, -1):
            if not reached[i]:
                continue
            rest = data[i:]
            if any(len(ib) > len(rest) and ib[: len(rest)] == rest for ib, _ in imgs):
                letters = []
                j = i
                while j > 0:
                    j, letter = parent[j]
                    letters.append(letter)
                letters.reverse()
                preimage = Word(tuple(letters), self.source_alphabet_size)
                return DecodeResult(preimage, w[i:], None)
        failed_at = max(i for i in range(n + 1) if reached[i])
        return DecodeResult(None, None, failed_at)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.images == other.images
            and self.target_alphabet_size == other.target_alphabet_size
        )

    def __hash__(self) -> int:
        return hash((self.images, self.target_alphabet_size))

    def __repr__(self) -> str:
        label = self.name or "; ".join(f"{a}->{img}" for a, img in enumerate(self.images))
        return f"Morphism({label})"


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of Morphism.decode.

    On success `preimage` maps back onto the decoded part of the input and
    `residue` is the trailing proper image prefix left over. On failure both
    are None and `failed_at` is the offset where decoding got stuck.
    """

    preimage: Word | None
    residue: Word | None
    failed_at: int | None

    @property
    def ok(self) -> bool:
        return self.preimage is not None


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """The morphism mapping w to outer(inner(w))."""
    if inner.target_alphabet_size > outer.source_alphabet_size:
        raise AlphabetMismatchError(
            f"cannot compose: inner targets {inner.target_alphabet_size} letters, "
            f"outer reads {outer.source_alphabet_size}"
        )
    name = None
    if outer.name and inner.name:
        name = f"{outer.name}*{inner.name}"
    return Morphism(
        [outer.apply(img) for img in inner.images],
        target_alphabet_size=outer.target_alphabet_size,
        name=name,
    )


class FixedPointStream:
    """Monotone prefix generator for the fixed point of a prolongable morphism.

    The buffer is always a prefix of the fixed point; growing it applies the
    morphism to the whole buffer, so the cost of prefix(n) is O(n) overall
    for expanding morphisms.
    """

    def __init__(self, morphism: Morphism, seed: int):
        if morphism.target_alphabet_size > morphism.source_alphabet_size:
            raise AlphabetMismatchError(
                "fixed points need images that stay inside the source alphabet"
            )
        if not morphism.is_prolongable(seed):
            raise ValueError(f"morphism is not prolongable on letter {seed}")
        self.morphism = morphism
        self.seed = seed
        self._buffer: list[int] = [seed]

    @property
    def buffered_prefix(self) -> Word:
        return Word._unsafe(tuple(self._buffer), self.morphism.source_alphabet_size)

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        images = [img.letters for img in self.morphism.images]
        buf = self._buffer
        while len(buf) < n:
            nxt: list[int] = []
            for a in buf:
                nxt.extend(images[a])
            buf = nxt
            self._buffer = buf
        return Word._unsafe(tuple(buf[:n]), self.morphism.source_alphabet_size)


def fixed_point_prefix(m: Morphism, seed: int, n: int) -> Word:
    """The length-n prefix of the infinite fixed point of m grown from seed."""
    return FixedPointStream(m, seed).prefix(n)


def is_order_preserving(m: Morphism, max_len: int) -> bool:
    """Exhaustively test u <= v implies m(u) <= m(v) over words of length <= max_len.

    Prefix pairs map to prefix pairs and never break the order, and any
    other pair reduces (by stripping the common prefix) to a pair differing
    in the first letter. So the exhaustive check over the bounded set is
    equivalent to comparing, for each pair of letters a < b, the greatest
    image of an a-word against the least image of a b-word.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    k = m.source_alphabet_size
    lo: list[Word | None] = [None] * k
    hi: list[Word | None] = [None] * k
    for a in range(k):
        for length in range(max_len):
            for suffix in product(range(k), repeat=length):
                img = m.apply(Word._unsafe((a,) + suffix, k))
                if lo[a] is None or img < lo[a]:
                    lo[a] = img
                if hi[a] is None or img > hi[a]:
                    hi[a] = img
    for a in range(k - 1):
        for b in range(a + 1, k):
            if hi[a] > lo[b]:
                return False
    return True


def strip_3free_header(w: Word) -> tuple[Word, Word]:
    """Split a binary word into its leading run of 1s (at most two) and the rest.

    A word extending a cube-free binary word starts with at most two 1s
    before the first 0; three leading 1s mean the cube 111 and there is no
    valid header.
    """
    if w.alphabet_size > 2:
        raise ValueError("expected a binary word")
    k = 0
    while k < len(w.letters) and k < 3 and w.letters[k] == 1:
        k += 1
    if k == 3:
        raise CubeDetectedError(
            "word begins with the cube 111; no header in {'', '1', '11'} applies"
        )
    return w[:k], w[k:]


#: The three standard substitutions: f encodes ternary letters as 0-run-length
#: blocks (k maps to 0 followed by k ones); h generates the ternary backbone
#: fixed point; g is the intermediate substitution applied to it.
STANDARD: dict[str, Morphism] = {
    "f": Morphism(("0", "01", "011"), name="f"),
    "g": Morphism(("011", "0121", "012121"), name="g"),
    "h": Morphism(("01", "02", "022"), name="h"),
}
