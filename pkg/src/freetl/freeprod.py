"""Free-product bookkeeping at counting level.

* :func:`sigma0_enumerate` lists alternating words in non-unit simple labels
  of two categories, which index the simple objects of their free product.
* :func:`realization_count` counts the oriented TL diagrams ``T`` on ``w``
  that extend to a non-crossing overlay with a pairing ``S`` of the group
  points ``g+``/``g-`` in ``Y_w = (g X g)(g X g)...``.  Since the group part
  of each hom space is one-dimensional, this is the dimension of the
  realized hom space, and it must agree with the oriented TL count.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

from .diagram import PairingDiagram, enumerate_oriented_tl, vector, inner_product
from .linalg import rank
from .word import Sign, Word, balanced_words, mas_decompose

__all__ = [
    "FactorSide",
    "AlternatingWord",
    "RealizationInstance",
    "sigma0_enumerate",
    "realization_instance",
    "compatible_diagrams",
    "realization_count",
    "realization_gram_rank",
    "realization_verify",
]


class FactorSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    def other(self) -> "FactorSide":
        return FactorSide.RIGHT if self is FactorSide.LEFT else FactorSide.LEFT


@dataclass(frozen=True)
class AlternatingWord:
    letters: tuple[tuple[FactorSide, object], ...] = ()

    def __post_init__(self):
        for (s1, _), (s2, _) in zip(self.letters, self.letters[1:]):
            if s1 is s2:
                raise ValueError("adjacent letters must come from opposite sides")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(str(label) for _, label in self.letters) or "∅"


def sigma0_enumerate(left_labels: Iterable, right_labels: Iterable, max_len: int) -> list[AlternatingWord]:
    """All alternating words of length ``<= max_len`` (the empty word first).

    Within one length, words starting on the left come first; labels are
    taken in sorted order.
    """
    left = sorted(set(left_labels), key=str)
    right = sorted(set(right_labels), key=str)
    pools = {FactorSide.LEFT: left, FactorSide.RIGHT: right}
    out = [AlternatingWord()]
    for k in range(1, max_len + 1):
        for first in (FactorSide.LEFT, FactorSide.RIGHT):
            sides = [first if i % 2 == 0 else first.other() for i in range(k)]
            for labels in product(*(pools[s] for s in sides)):
                out.append(AlternatingWord(tuple(zip(sides, labels))))
    return out


@dataclass(frozen=True)
class RealizationInstance:
    """Point layout of ``Y_w``: each letter ``e`` of ``w`` becomes ``g_e X_e g_e``.

    ``points`` lists ``("g", sign)`` and ``("x", index)`` entries left to right.
    """

    word: Word
    points: tuple[tuple[str, int], ...]
    g_sequence: tuple[Sign, ...]
    x_blocks: tuple[Word, ...]

    @property
    def g_balance(self) -> int:
        return sum(self.g_sequence)


def realization_instance(w) -> RealizationInstance:
    w = Word.coerce(w)
    points: list[tuple[str, int]] = []
    for i, s in enumerate(w):
        points += [("g", int(s)), ("x", i), ("g", int(s))]
    blocks = mas_decompose(w).blocks if len(w) else ()
    return RealizationInstance(w, tuple(points), tuple(Sign(v) for k, v in points if k == "g"), blocks)


def _compatible(inst: RealizationInstance, T: PairingDiagram) -> bool:
    # each g point lies in the face given by the innermost arc of T around it;
    # a non-crossing +/- pairing of the g points avoiding T exists iff every
    # face has zero total g-sign
    stack: list[int] = []
    face_sum: dict[int, int] = {}
    for kind, v in inst.points:
        if kind == "x":
            partner = T.pairs[v]
            if partner > v:
                stack.append(v)
            else:
                stack.pop()
        else:
            face = stack[-1] if stack else -1
            face_sum[face] = face_sum.get(face, 0) + v
    return all(s == 0 for s in face_sum.values())


def compatible_diagrams(w) -> list[PairingDiagram]:
    """Oriented TL diagrams on ``w`` admitting a compatible group-point pairing."""
    inst = realization_instance(w)
    return [T for T in enumerate_oriented_tl(inst.word) if _compatible(inst, T)]


def realization_count(w) -> int:
    return len(compatible_diagrams(w))


def realization_gram_rank(w, delta=3) -> int:
    """Rank at a fixed loop value of the inner products of the realized diagrams."""
    d = Fraction(delta)
    vecs = [vector(T, 1, d) for T in compatible_diagrams(w)]
    if not vecs:
        return 0
    return rank([[inner_product(a, b) for b in vecs] for a in vecs])


def realization_verify(max_len: int, gram: bool = False, delta=3) -> dict:
    """Compare realized counts with oriented TL counts for all balanced words up to ``max_len``."""
    rows = []
    for w in balanced_words(max_len):
        tl = len(enumerate_oriented_tl(w))
        ncp = realization_count(w)
        row = {"word": str(w), "ncp_count": ncp, "tl_count": tl, "match": ncp == tl}
        if gram:
            r = realization_gram_rank(w, delta)
            row["gram_rank"] = r
            row["match"] = row["match"] and r == tl
        rows.append(row)
    return {"check": "realization", "max_len": max_len, "pass": all(r["match"] for r in rows), "words": rows}
