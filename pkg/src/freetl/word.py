"""Sign words: the colors of discs.

A word is a finite sequence over ``{+, -}``.  Besides the involution and
rotations, this module provides the maximally-alternately-signed (MAS) block
decomposition that drives the overlay recursion in :mod:`freetl.freext`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

__all__ = [
    "Sign",
    "Word",
    "WordClass",
    "MasDecomposition",
    "involution",
    "classify",
    "mas_decompose",
    "mas_parity_split",
    "rotate",
    "all_words",
    "balanced_words",
    "alternating",
]


class Sign(enum.IntEnum):
    PLUS = 1
    MINUS = -1

    def flip(self) -> "Sign":
        return Sign(-self.value)

    @property
    def char(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    @classmethod
    def parse(cls, c: str) -> "Sign":
        if c == "+":
            return cls.PLUS
        if c in ("-", "−"):
            return cls.MINUS
        raise ValueError(f"not a sign: {c!r}")

    def __str__(self) -> str:
        return self.char


@dataclass(frozen=True)
class Word:
    signs: tuple[Sign, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(Sign(s) for s in self.signs))

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls(tuple(Sign.parse(c) for c in text))

    @classmethod
    def coerce(cls, w: "Word | str | Iterable") -> "Word":
        if isinstance(w, Word):
            return w
        if isinstance(w, str):
            return cls.parse(w)
        return cls(tuple(w))

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[Sign]:
        return iter(self.signs)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.signs[i])
        return self.signs[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.signs + Word.coerce(other).signs)

    def __str__(self) -> str:
        return "".join(s.char for s in self.signs)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def star(self) -> "Word":
        return involution(self)

    @property
    def balance(self) -> int:
        return sum(self.signs)

    def is_balanced(self) -> bool:
        return self.balance == 0

    def is_alternating(self) -> bool:
        """True for nonempty words with no two equal adjacent signs (any parity)."""
        return bool(self.signs) and all(a != b for a, b in zip(self.signs, self.signs[1:]))


class WordClass(enum.Enum):
    EMPTY = "empty"
    ALTERNATING = "alternating"
    SAME_ENDS = "same_ends"
    BALANCED_OTHER = "balanced_other"
    UNBALANCED = "unbalanced"


@dataclass(frozen=True)
class MasDecomposition:
    blocks: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def word(self) -> Word:
        out = Word()
        for b in self.blocks:
            out = out + b
        return out

    def block_of_position(self) -> tuple[int, ...]:
        """Block index (0-based) of each position of the underlying word."""
        out: list[int] = []
        for k, b in enumerate(self.blocks):
            out.extend([k] * len(b))
        return tuple(out)


def involution(w: Word) -> Word:
    """Reverse the word and flip every sign."""
    return Word(tuple(s.flip() for s in reversed(w.signs)))


def classify(w: Word) -> WordClass:
    if not len(w):
        return WordClass.EMPTY
    if len(w) % 2 == 0 and w.is_alternating():
        return WordClass.ALTERNATING
    if not w.is_balanced():
        return WordClass.UNBALANCED
    if w[0] == w[-1]:
        return WordClass.SAME_ENDS
    return WordClass.BALANCED_OTHER


def mas_decompose(w: Word) -> MasDecomposition:
    """Split ``w`` at every pair of equal adjacent signs."""
    if not len(w):
        raise ValueError("MAS decomposition of the empty word is undefined")
    blocks, start = [], 0
    for i in range(1, len(w)):
        if w[i] == w[i - 1]:
            blocks.append(w[start:i])
            start = i
    blocks.append(w[start:])
    return MasDecomposition(tuple(blocks))


def mas_parity_split(w: Word) -> tuple[Word, Word]:
    """Concatenate odd-indexed and even-indexed MAS blocks (1-based indexing).

    Requires an even number of blocks, as every word starting and ending with
    the same sign and admitting a diagram has.
    """
    dec = mas_decompose(w)
    if len(dec) % 2:
        raise ValueError(f"{w} has {len(dec)} MAS blocks; parity split needs an even count")
    odd, even = Word(), Word()
    for k, b in enumerate(dec.blocks):
        if k % 2 == 0:
            odd = odd + b
        else:
            even = even + b
    return odd, even


def rotate(w: Word, k: int) -> Word:
    """Move the first ``k`` letters to the end (``0 <= k <= len(w)``)."""
    if not 0 <= k <= len(w):
        raise ValueError(f"rotation {k} out of range for word of length {len(w)}")
    return Word(w.signs[k:] + w.signs[:k])


def alternating(n: int, first: Sign = Sign.PLUS) -> Word:
    """Alternating word of length ``n`` starting with ``first``."""
    first = Sign(first)
    return Word(tuple(first if i % 2 == 0 else first.flip() for i in range(n)))


def all_words(length: int) -> list[Word]:
    """All sign words of the given length, '+' before '-' lexicographically."""
    return [Word(p) for p in product((Sign.PLUS, Sign.MINUS), repeat=length)]


def balanced_words(max_len: int) -> list[Word]:
    """Balanced words of length <= max_len, ordered by length then lexicographically."""
    out = []
    for n in range(0, max_len + 1, 2):
        out.extend(w for w in all_words(n) if w.is_balanced())
    return out
