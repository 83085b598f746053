"""Temperley-Lieb diagrams and the linear maps built from them.

Conventions
-----------
Boundary points of a disc are numbered ``0 .. n-1`` clockwise, starting right
after the marked segment.  A morphism ``u -> v`` is a vector in the space of
color ``v + u*``: the top edge carries ``v`` left to right (indices
``0 .. |v|-1``), then the bottom edge is read right to left, so bottom
position ``j`` (counted from the left) sits at index ``|v| + |u| - 1 - j``.
A vector of ``P_w`` is the same thing as a morphism ``() -> w``.

Diagrams carry no closed loops; loops produced by gluing are turned into
powers of the loop parameter ``delta`` at composition time.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping

from .coeff import DELTA, eval_at, scalar_from_json, scalar_to_json
from .word import Sign, Word, rotate

__all__ = [
    "PairingDiagram",
    "Morphism",
    "Side",
    "enumerate_oriented_tl",
    "enumerate_unshaded_tl",
    "compose",
    "tensor",
    "star",
    "rotate_element",
    "inner_product",
    "trace_close",
    "identity",
    "unit",
    "counit",
    "cup_cap",
    "vector",
    "hom_basis",
    "is_noncrossing",
    "pairing_loops",
]

EMPTY = Word()


def is_noncrossing(pairs: tuple[int, ...]) -> bool:
    stack = []
    for i, p in enumerate(pairs):
        if p > i:
            stack.append(i)
        elif p < i:
            if not stack or stack.pop() != p:
                return False
        else:
            return False
    return not stack


@dataclass(frozen=True)
class PairingDiagram:
    """A non-crossing perfect matching of the boundary points of a colored disc.

    ``pairs[i]`` is the partner of point ``i``.  In oriented mode every pair
    must join a ``+`` point to a ``-`` point; unshaded diagrams ignore signs.
    """

    color: Word
    pairs: tuple[int, ...]
    oriented: bool = True

    def __post_init__(self):
        color = Word.coerce(self.color)
        object.__setattr__(self, "color", color)
        pairs = tuple(int(p) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        n = len(color)
        if len(pairs) != n:
            raise ValueError(f"{len(pairs)} partners for a word of length {n}")
        for i, p in enumerate(pairs):
            if not 0 <= p < n or p == i or pairs[p] != i:
                raise ValueError(f"pairs {pairs} is not a fixed-point-free involution")
        if not is_noncrossing(pairs):
            raise ValueError(f"pairs {pairs} cross")
        if self.oriented:
            for i, p in enumerate(pairs):
                if color[i] == color[p]:
                    raise ValueError(f"points {i} and {p} of {color} carry the same sign")

    @classmethod
    def _make(cls, color: Word, pairs: tuple[int, ...], oriented: bool = True) -> "PairingDiagram":
        # trusted constructor for diagrams produced by gluing valid diagrams
        d = object.__new__(cls)
        object.__setattr__(d, "color", color)
        object.__setattr__(d, "pairs", pairs)
        object.__setattr__(d, "oriented", oriented)
        return d

    @classmethod
    def from_arcs(cls, color, arcs: Iterable[tuple[int, int]], oriented: bool = True) -> "PairingDiagram":
        color = Word.coerce(color)
        p = [-1] * len(color)
        for i, j in arcs:
            p[i], p[j] = j, i
        return cls(color, tuple(p), oriented)

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(i, j)`` with ``i < j``, ordered by the smaller endpoint."""
        return tuple((i, p) for i, p in enumerate(self.pairs) if i < p)

    def sort_key(self):
        return self.arcs

    def __len__(self) -> int:
        return len(self.pairs)

    def unshaded(self) -> "PairingDiagram":
        return PairingDiagram._make(self.color, self.pairs, False)

    def to_json(self) -> dict:
        out = {"word": str(self.color), "pairs": [list(a) for a in self.arcs]}
        if not self.oriented:
            out["mode"] = "unshaded"
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "PairingDiagram":
        return cls.from_arcs(obj["word"], obj["pairs"], obj.get("mode", "oriented") != "unshaded")

    def __repr__(self) -> str:
        mode = "" if self.oriented else ", unshaded"
        return f"PairingDiagram({str(self.color)!r}, {list(self.arcs)}{mode})"


@lru_cache(maxsize=None)
def _matchings(signs: tuple[int, ...], oriented: bool) -> tuple[tuple[int, ...], ...]:
    n = len(signs)
    if n == 0:
        return ((),)
    if n % 2:
        return ()
    out = []
    for j in range(1, n, 2):
        if oriented and signs[j] == signs[0]:
            continue
        for inner in _matchings(signs[1:j], oriented):
            for outer in _matchings(signs[j + 1:], oriented):
                p = [0] * n
                p[0], p[j] = j, 0
                for a, b in enumerate(inner):
                    p[a + 1] = b + 1
                for a, b in enumerate(outer):
                    p[a + j + 1] = b + j + 1
                out.append(tuple(p))
    return tuple(out)


def _arc_key(pairs: tuple[int, ...]):
    return tuple((i, p) for i, p in enumerate(pairs) if i < p)


@lru_cache(maxsize=None)
def enumerate_oriented_tl(w: Word) -> tuple[PairingDiagram, ...]:
    """All oriented TL diagrams of color ``w``, in canonical order."""
    w = Word.coerce(w)
    found = sorted(_matchings(tuple(int(s) for s in w), True), key=_arc_key)
    return tuple(PairingDiagram._make(w, p, True) for p in found)


def enumerate_unshaded_tl(n_points: int, color: Word | str | None = None) -> tuple[PairingDiagram, ...]:
    """All non-crossing perfect matchings of ``n_points`` points, signs ignored.

    ``color`` only serves as bookkeeping; it defaults to ``+`` repeated.
    """
    color = Word((Sign.PLUS,) * n_points) if color is None else Word.coerce(color)
    if len(color) != n_points:
        raise ValueError("color length does not match n_points")
    return _unshaded(color)


@lru_cache(maxsize=None)
def _unshaded(color: Word) -> tuple[PairingDiagram, ...]:
    found = sorted(_matchings((0,) * len(color), False), key=_arc_key)
    return tuple(PairingDiagram._make(color, p, False) for p in found)


def hom_basis(source, target, oriented: bool = True) -> tuple[PairingDiagram, ...]:
    """Diagram basis of Hom(source, target), i.e. of the space colored ``target + source*``."""
    color = Word.coerce(target) + Word.coerce(source).star()
    if oriented:
        return enumerate_oriented_tl(color)
    return enumerate_unshaded_tl(len(color), color)


# --- gluing kernels -------------------------------------------------------


@lru_cache(maxsize=200_000)
def _glue(fp: tuple[int, ...], f_top: int, gp: tuple[int, ...], g_top: int) -> tuple[tuple[int, ...], int]:
    """Stack ``g`` under ``f``; return the result's partner array and loop count.

    ``f`` has ``f_top`` top points and ``len(fp) - f_top`` bottom points, which
    must equal ``g_top``.
    """
    nf, ng = len(fp), len(gp)
    g_bot = ng - g_top
    res = [0] * (f_top + g_bot)
    seen = [False] * g_top

    def walk(side: int, idx: int) -> int:
        # side 0: at point idx of f, 1: at point idx of g; returns result index
        while True:
            if side == 0:
                p = fp[idx]
                if p < f_top:
                    return p
                j = nf - 1 - p
                seen[j] = True
                side, idx = 1, j
            else:
                q = gp[idx]
                if q >= g_top:
                    return f_top + q - g_top
                seen[q] = True
                side, idx = 0, nf - 1 - q

    for i in range(f_top):
        res[i] = walk(0, i)
    for k in range(g_top, ng):
        res[f_top + k - g_top] = walk(1, k)

    loops = 0
    for j in range(g_top):
        if seen[j]:
            continue
        loops += 1
        cur = j
        while not seen[cur]:
            seen[cur] = True
            q = gp[cur]              # g-top partner of glue point cur, still internal
            seen[q] = True
            p = fp[nf - 1 - q]       # f-bottom partner
            cur = nf - 1 - p
    return tuple(res), loops


def _juxtapose(fp, f_top, gp, g_top) -> tuple[int, ...]:
    nf, ng = len(fp), len(gp)
    f_bot = nf - f_top
    n = nf + ng

    def f_map(i):
        return i if i < f_top else n - 1 - (nf - 1 - i)

    def g_map(i):
        return f_top + i if i < g_top else n - 1 - (f_bot + (ng - 1 - i))

    res = [0] * n
    for i, p in enumerate(fp):
        res[f_map(i)] = f_map(p)
    for i, p in enumerate(gp):
        res[g_map(i)] = g_map(p)
    return tuple(res)


def pairing_loops(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Number of closed loops formed by two matchings of the same point set."""
    seen = [False] * len(a)
    loops = 0
    for start in range(len(a)):
        if seen[start]:
            continue
        loops += 1
        cur = start
        while not seen[cur]:
            seen[cur] = True
            nxt = a[cur]
            seen[nxt] = True
            cur = b[nxt]
    return loops


# --- morphisms -------------------------------------------------------------


class Morphism:
    """A linear combination of diagrams in Hom(source, target).

    ``delta`` is the value of a closed loop; it also fixes the scalar domain
    (a :class:`~freetl.coeff.RationalFunction` when symbolic, a Fraction
    otherwise).  Zero coefficients are dropped and terms are kept in
    canonical diagram order.
    """

    __slots__ = ("source", "target", "terms", "delta", "oriented")

    def __init__(self, source, target, terms: Mapping | Iterable = (), delta=DELTA, oriented: bool | None = None):
        self.source = Word.coerce(source)
        self.target = Word.coerce(target)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[PairingDiagram, object] = {}
        color = self.color
        for d, c in items:
            if d.color != color:
                raise ValueError(f"diagram color {d.color} does not match {color}")
            acc[d] = acc[d] + c if d in acc else c
        modes = {d.oriented for d in acc}
        if len(modes) > 1:
            raise ValueError("cannot mix oriented and unshaded diagrams")
        if oriented is None:
            oriented = modes.pop() if modes else True
        elif modes and modes != {oriented}:
            raise ValueError("diagram mode disagrees with the requested mode")
        self.oriented = oriented
        self.delta = delta
        self.terms = MappingProxyType(
            {d: acc[d] for d in sorted(acc, key=PairingDiagram.sort_key) if acc[d]}
        )

    @property
    def color(self) -> Word:
        return self.target + self.source.star()

    @classmethod
    def from_diagram(cls, d: PairingDiagram, source=EMPTY, target=None, coeff=1, delta=DELTA) -> "Morphism":
        if target is None:
            target = d.color
        return cls(source, target, {d: coeff}, delta, d.oriented)

    @classmethod
    def zero(cls, source, target, delta=DELTA, oriented: bool = True) -> "Morphism":
        return cls(source, target, {}, delta, oriented)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: PairingDiagram):
        return self.terms.get(d, 0)

    def scalar(self):
        """Value of an endomorphism of the empty word."""
        if self.source or self.target:
            raise ValueError("scalar() needs a morphism () -> ()")
        return self.terms.get(PairingDiagram._make(EMPTY, (), self.oriented), 0)

    def _same_space(self, other: "Morphism"):
        if not isinstance(other, Morphism):
            raise TypeError(f"expected Morphism, got {type(other).__name__}")
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError(
                f"morphisms live in different spaces: {self.source}->{self.target} vs {other.source}->{other.target}"
            )
        if self.oriented != other.oriented:
            raise ValueError("cannot combine oriented and unshaded morphisms")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._same_space(other)
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc[d] + c if d in acc else c
        return Morphism(self.source, self.target, acc, self.delta, self.oriented)

    def __neg__(self) -> "Morphism":
        return Morphism(self.source, self.target, {d: -c for d, c in self.terms.items()}, self.delta, self.oriented)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def __mul__(self, c) -> "Morphism":
        if isinstance(c, Morphism):
            return NotImplemented
        return Morphism(self.source, self.target, {d: c * x for d, x in self.terms.items()}, self.delta, self.oriented)

    __rmul__ = __mul__

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.oriented == other.oriented
            and dict(self.terms) == dict(other.terms)
        )

    def __hash__(self):
        return hash((self.source, self.target, self.oriented, tuple(self.terms.items())))

    def reshape(self, source, target) -> "Morphism":
        """Reinterpret the same diagrams as a morphism ``source -> target``."""
        source, target = Word.coerce(source), Word.coerce(target)
        if target + source.star() != self.color:
            raise ValueError(f"{source}->{target} does not have color {self.color}")
        return Morphism(source, target, self.terms, self.delta, self.oriented)

    def as_vector(self) -> "Morphism":
        return self.reshape(EMPTY, self.color)

    def evaluate(self, d) -> "Morphism":
        """Specialize symbolic coefficients at the rational loop value ``d``."""
        d = Fraction(d)
        return Morphism(
            self.source, self.target, {k: eval_at(c, d) for k, c in self.terms.items()}, d, self.oriented
        )

    def to_json(self) -> dict:
        out = {
            "source": str(self.source),
            "target": str(self.target),
            "terms": [{"pairs": [list(a) for a in d.arcs], "coeff": scalar_to_json(c)} for d, c in self.terms.items()],
        }
        if not self.oriented:
            out["mode"] = "unshaded"
        return out

    @classmethod
    def from_json(cls, obj: dict, delta=DELTA) -> "Morphism":
        oriented = obj.get("mode", "oriented") != "unshaded"
        source, target = Word.parse(obj["source"]), Word.parse(obj["target"])
        color = target + source.star()
        symbolic = not isinstance(delta, (int, Fraction))
        terms = [
            (PairingDiagram.from_arcs(color, t["pairs"], oriented), scalar_from_json(t["coeff"], symbolic))
            for t in obj["terms"]
        ]
        return cls(source, target, terms, delta, oriented)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{list(d.arcs)}" for d, c in self.terms.items()) or "0"
        return f"Morphism({self.source}->{self.target}: {body})"


def vector(d: PairingDiagram, coeff=1, delta=DELTA) -> Morphism:
    """The element of P_w given by a single diagram."""
    return Morphism.from_diagram(d, EMPTY, d.color, coeff, delta)


def _check_delta(a: Morphism, b: Morphism):
    if a.delta is not b.delta and a.delta != b.delta:
        raise ValueError(f"loop values differ: {a.delta} vs {b.delta}")


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``f o g`` for ``g: t -> u`` and ``f: u -> v``; each closed loop contributes ``delta``."""
    if f.source != g.target:
        raise ValueError(f"cannot compose: source {f.source} of f != target {g.target} of g")
    if f.oriented != g.oriented:
        raise ValueError("cannot compose oriented with unshaded morphisms")
    _check_delta(f, g)
    f_top, g_top = len(f.target), len(g.target)
    color = f.target + g.source.star()
    by_loops: dict[tuple[int, ...], dict[int, object]] = defaultdict(dict)
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            pairs, loops = _glue(df.pairs, f_top, dg.pairs, g_top)
            slot = by_loops[pairs]
            c = cf * cg
            slot[loops] = slot[loops] + c if loops in slot else c
    delta = f.delta
    terms = {}
    for pairs, slot in by_loops.items():
        total = 0
        for k, c in slot.items():
            total = total + (c * delta ** k if k else c)
        terms[PairingDiagram._make(color, pairs, f.oriented)] = total
    return Morphism(g.source, f.target, terms, delta, f.oriented)


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """Horizontal juxtaposition: ``f`` on the left, ``g`` on the right."""
    if f.oriented != g.oriented:
        raise ValueError("cannot tensor oriented with unshaded morphisms")
    _check_delta(f, g)
    source, target = f.source + g.source, f.target + g.target
    color = target + source.star()
    f_top, g_top = len(f.target), len(g.target)
    terms = {}
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            d = PairingDiagram._make(color, _juxtapose(df.pairs, f_top, dg.pairs, g_top), f.oriented)
            terms[d] = cf * cg
    return Morphism(source, target, terms, f.delta, f.oriented)


def star(x: Morphism) -> Morphism:
    """Adjoint: reflect every diagram (index ``i -> n-1-i``) and conjugate coefficients.

    A morphism ``u -> v`` goes to ``v -> u``; as vectors this maps ``P_w`` to ``P_{w*}``.
    """
    color = x.color.star()
    n = len(color)
    terms = {}
    for d, c in x.terms.items():
        p = d.pairs
        q = tuple(n - 1 - p[n - 1 - i] for i in range(n))
        conj = c.conjugate() if hasattr(c, "conjugate") else c
        terms[PairingDiagram._make(color, q, d.oriented)] = conj
    return Morphism(x.target, x.source, terms, x.delta, x.oriented)


def rotate_element(x: Morphism, k: int) -> Morphism:
    """Rotation tangle P_{w1 w2} -> P_{w2 w1} where ``len(w1) == k``; returns a vector."""
    w = x.color
    n = len(w)
    new_color = rotate(w, k)
    terms = {}
    for d, c in x.terms.items():
        q = [0] * n
        for i, p in enumerate(d.pairs):
            q[(i - k) % n] = (p - k) % n
        terms[PairingDiagram._make(new_color, tuple(q), d.oriented)] = c
    return Morphism(EMPTY, new_color, terms, x.delta, x.oriented)


@lru_cache(maxsize=200_000)
def _loops_cached(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return pairing_loops(a, b)


def inner_product(x: Morphism, y: Morphism):
    """Sesquilinear form: close ``x`` against the mirror of ``y``, one ``delta`` per loop."""
    if x.color != y.color:
        raise ValueError(f"inner product of different colors {x.color} and {y.color}")
    _check_delta(x, y)
    delta = x.delta
    total = 0
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            conj = cy.conjugate() if hasattr(cy, "conjugate") else cy
            total = total + cx * conj * delta ** _loops_cached(dx.pairs, dy.pairs)
    return total


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def identity(w, delta=DELTA, oriented: bool = True) -> Morphism:
    w = Word.coerce(w)
    n = len(w)
    pairs = tuple(2 * n - 1 - i for i in range(2 * n))
    d = PairingDiagram._make(w + w.star(), pairs, oriented)
    return Morphism(w, w, {d: 1}, delta, oriented)


def unit(w, delta=DELTA, oriented: bool = True) -> Morphism:
    """Coevaluation ``() -> w w*``: nested arcs."""
    w = Word.coerce(w)
    return identity(w, delta, oriented).reshape(EMPTY, w + w.star())


def counit(w, delta=DELTA, oriented: bool = True) -> Morphism:
    """Evaluation ``w w* -> ()``."""
    return star(unit(w, delta, oriented))


def cup_cap(w, i: int, delta=DELTA, oriented: bool = True) -> Morphism:
    """The TL generator ``e_i`` on object ``w``: a cap on strands ``i, i+1`` over a cup."""
    w = Word.coerce(w)
    n = len(w)
    if not 0 <= i < n - 1:
        raise ValueError(f"e_{i} undefined on {n} strands")
    if oriented and w[i] == w[i + 1]:
        raise ValueError(f"strands {i},{i+1} of {w} carry the same sign")
    N = 2 * n
    p = [N - 1 - k for k in range(N)]
    bi, bj = N - 1 - i, N - 1 - (i + 1)
    p[i], p[i + 1] = i + 1, i
    p[bi], p[bj] = bj, bi
    d = PairingDiagram._make(w + w.star(), tuple(p), oriented)
    return Morphism(w, w, {d: 1}, delta, oriented)


def trace_close(x: Morphism, side: Side = Side.RIGHT):
    """Close every strand of an endomorphism around the chosen side."""
    if x.source != x.target:
        raise ValueError(f"trace of a non-endomorphism {x.source}->{x.target}")
    side = Side(side)
    v, d, o = x.source, x.delta, x.oriented
    if side is Side.RIGHT:
        closed = counit(v, d, o) @ tensor(x, identity(v.star(), d, o)) @ unit(v, d, o)
    else:
        vs = v.star()
        closed = counit(vs, d, o) @ tensor(identity(vs, d, o), x) @ unit(vs, d, o)
    return closed.scalar()
