"""The free oriented extension of Temperley-Lieb.

Spaces are spanned by oriented TL diagrams.  For words that start and end
with the same sign, every diagram splits along the MAS parity classes into an
overlay of two smaller diagrams (:func:`phi`); :func:`overlay_spanning_set`
rebuilds the spanning sets from that recursion so it can be compared with
direct enumeration.  Projections (Jones-Wenzl idempotents and the block
projections ``f_vv``) and their minimality are computed here as well.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Protocol, Sequence

from .coeff import DELTA, RationalFunction, quantum_int
from .diagram import (
    Morphism,
    PairingDiagram,
    Side,
    compose,
    cup_cap,
    enumerate_oriented_tl,
    hom_basis,
    identity,
    inner_product,
    is_noncrossing,
    rotate_element,
    star,
    tensor,
    trace_close,
    vector,
)
from .linalg import rank
from .word import Word, WordClass, all_words, alternating, classify, mas_decompose, mas_parity_split, rotate

__all__ = [
    "SubfactorPlanarAlgebra",
    "TemperleyLieb",
    "OverlayWitness",
    "Projection",
    "OverlayAssertionError",
    "SingularityError",
    "spanning_set",
    "overlay_spanning_set",
    "parity_classes",
    "phi",
    "overlay",
    "rotate_diagram",
    "form_compatibility_check",
    "jones_wenzl",
    "f_vv",
    "compressed_rank",
    "is_minimal",
    "AnnularTangle",
    "annular_family",
    "annular_adjoint_check",
    "simple_objects",
    "random_element",
    "form_symmetry_check",
]


class OverlayAssertionError(AssertionError):
    """A diagram pairs points from different MAS parity classes."""


class SingularityError(ZeroDivisionError):
    """A quantum integer needed by the Wenzl recursion vanishes at the chosen loop value."""


class SubfactorPlanarAlgebra(Protocol):
    """What the overlay construction needs from a shaded planar algebra.

    Only :class:`TemperleyLieb` is provided; other instances would need a
    closed-network evaluator as well.
    """

    def alternating_basis(self, w: Word) -> Sequence[PairingDiagram]: ...

    def loop_value(self): ...


@dataclass(frozen=True)
class TemperleyLieb:
    delta: object = DELTA

    def alternating_basis(self, w: Word) -> Sequence[PairingDiagram]:
        if classify(w) not in (WordClass.ALTERNATING, WordClass.EMPTY):
            raise ValueError(f"{w} is not a shaded color")
        return enumerate_oriented_tl(w)

    def loop_value(self):
        return self.delta


def spanning_set(w) -> tuple[PairingDiagram, ...]:
    """Networkless spanning set of the space colored ``w`` (a basis for loop value >= 2)."""
    return enumerate_oriented_tl(Word.coerce(w))


# --- MAS overlays ----------------------------------------------------------


def parity_classes(w: Word) -> tuple[int, ...]:
    """0 for points in odd-indexed MAS blocks (1st, 3rd, ...), 1 for even-indexed ones."""
    return tuple(k % 2 for k in mas_decompose(w).block_of_position())


def _require_same_ends(w: Word):
    if classify(w) is not WordClass.SAME_ENDS:
        raise ValueError(f"{w} is not a balanced non-alternating word with equal end signs")


@dataclass(frozen=True)
class OverlayWitness:
    word: Word
    odd_part: PairingDiagram
    even_part: PairingDiagram
    combined: PairingDiagram


def _restrict(d: PairingDiagram, positions: Sequence[int], color: Word) -> PairingDiagram:
    index = {p: k for k, p in enumerate(positions)}
    return PairingDiagram(color, tuple(index[d.pairs[p]] for p in positions), d.oriented)


def phi(w, X: PairingDiagram) -> OverlayWitness:
    """Split a networkless diagram on ``w`` into its odd and even MAS parts."""
    w = Word.coerce(w)
    _require_same_ends(w)
    if X.color != w:
        raise ValueError(f"diagram has color {X.color}, expected {w}")
    cls = parity_classes(w)
    for i, j in X.arcs:
        if cls[i] != cls[j]:
            raise OverlayAssertionError(f"arc ({i},{j}) of {X} joins different MAS parity classes of {w}")
    w_odd, w_even = mas_parity_split(w)
    odd_pos = [i for i, c in enumerate(cls) if c == 0]
    even_pos = [i for i, c in enumerate(cls) if c == 1]
    return OverlayWitness(w, _restrict(X, odd_pos, w_odd), _restrict(X, even_pos, w_even), X)


def overlay(w, odd_part: PairingDiagram, even_part: PairingDiagram) -> PairingDiagram | None:
    """Embed the two parts back on ``w``; ``None`` if the result would cross."""
    w = Word.coerce(w)
    _require_same_ends(w)
    w_odd, w_even = mas_parity_split(w)
    if odd_part.color != w_odd or even_part.color != w_even:
        raise ValueError(f"parts have colors {odd_part.color}, {even_part.color}; expected {w_odd}, {w_even}")
    cls = parity_classes(w)
    odd_pos = [i for i, c in enumerate(cls) if c == 0]
    even_pos = [i for i, c in enumerate(cls) if c == 1]
    p = [0] * len(w)
    for positions, part in ((odd_pos, odd_part), (even_pos, even_part)):
        for k, q in enumerate(part.pairs):
            p[positions[k]] = positions[q]
    pairs = tuple(p)
    if not is_noncrossing(pairs):
        return None
    return PairingDiagram(w, pairs, odd_part.oriented)


def rotate_diagram(d: PairingDiagram, k: int) -> PairingDiagram:
    n = len(d)
    q = [0] * n
    for i, p in enumerate(d.pairs):
        q[(i - k) % n] = (p - k) % n
    return PairingDiagram(rotate(d.color, k), tuple(q), d.oriented)


@lru_cache(maxsize=None)
def _overlay_set(w: Word, algebra: SubfactorPlanarAlgebra) -> tuple[PairingDiagram, ...]:
    kind = classify(w)
    if kind is WordClass.EMPTY:
        return (PairingDiagram(w, ()),)
    if kind is WordClass.UNBALANCED:
        return ()
    if kind is WordClass.ALTERNATING:
        return tuple(algebra.alternating_basis(w))
    if kind is WordClass.SAME_ENDS:
        w_odd, w_even = mas_parity_split(w)
        out = []
        for a in _overlay_set(w_odd, algebra):
            for b in _overlay_set(w_even, algebra):
                d = overlay(w, a, b)
                if d is not None:
                    out.append(d)
        return tuple(out)
    # some rotation starts and ends with the same sign
    n = len(w)
    k = next(k for k in range(1, n) if classify(rotate(w, k)) is WordClass.SAME_ENDS)
    return tuple(rotate_diagram(d, n - k) for d in _overlay_set(rotate(w, k), algebra))


def overlay_spanning_set(w, algebra: SubfactorPlanarAlgebra = TemperleyLieb()) -> tuple[PairingDiagram, ...]:
    """Spanning set of ``w`` built from alternating bases by MAS overlays and rotations."""
    return _overlay_set(Word.coerce(w), algebra)


def form_compatibility_check(w) -> dict:
    """Check ``[X, Y]_w == [X_odd, Y_odd] * [X_even, Y_even]`` on all basis pairs."""
    w = Word.coerce(w)
    basis = spanning_set(w)
    witnesses = [phi(w, X) for X in basis]
    failures = []
    for a in witnesses:
        for b in witnesses:
            lhs = inner_product(vector(a.combined), vector(b.combined))
            rhs = inner_product(vector(a.odd_part), vector(b.odd_part)) * inner_product(
                vector(a.even_part), vector(b.even_part)
            )
            if lhs != rhs:
                failures.append({"x": a.combined.to_json(), "y": b.combined.to_json(), "lhs": str(lhs), "rhs": str(rhs)})
    report = {"check": "form_compatibility", "word": str(w), "pass": not failures, "pairs": len(basis) ** 2}
    if failures:
        report["witness"] = failures[0]
    return report


# --- projections -----------------------------------------------------------


@dataclass(frozen=True)
class Projection:
    word: Word
    element: Morphism

    def is_idempotent(self) -> bool:
        return compose(self.element, self.element) == self.element

    def is_self_adjoint(self) -> bool:
        return star(self.element) == self.element

    def evaluate(self, d) -> "Projection":
        return Projection(self.word, self.element.evaluate(d))


def _ratio(n: int, delta):
    """[n]/[n+1] at the given loop value."""
    num, den = quantum_int(n), quantum_int(n + 1)
    if isinstance(delta, RationalFunction):
        return RationalFunction(num, den)
    dv = den(Fraction(delta))
    if dv == 0:
        raise SingularityError(f"[{n + 1}] vanishes at delta = {delta}")
    return Fraction(num(Fraction(delta))) / dv


@lru_cache(maxsize=None)
def jones_wenzl(n: int, sign=1, delta=DELTA) -> Projection:
    """Jones-Wenzl idempotent on ``n`` alternating strands starting with ``sign``.

    Wenzl's recursion ``f_{k+1} = f_k (x) 1 - [k]/[k+1] (f_k (x) 1) e_k (f_k (x) 1)``.
    """
    if n < 0:
        raise ValueError("jones_wenzl needs n >= 0")
    obj = alternating(n, sign)
    if n <= 1:
        return Projection(obj, identity(obj, delta))
    prev = jones_wenzl(n - 1, sign, delta).element
    F = tensor(prev, identity(obj[n - 1:], delta))
    e = cup_cap(obj, n - 2, delta)
    elem = F - _ratio(n - 1, delta) * compose(compose(F, e), F)
    return Projection(obj, elem)


def f_vv(v, delta=DELTA) -> Projection:
    """Tensor product of Jones-Wenzl idempotents, one per MAS block of ``v``."""
    v = Word.coerce(v)
    if not len(v):
        raise ValueError("f_vv needs a nonempty word; the unit is the identity of ()")
    elem = None
    for b in mas_decompose(v).blocks:
        jw = jones_wenzl(len(b), b[0], delta).element
        elem = jw if elem is None else tensor(elem, jw)
    return Projection(v, elem)


def _fixed(m: Morphism, delta) -> Morphism:
    if isinstance(m.delta, RationalFunction):
        return m.evaluate(delta)
    if Fraction(m.delta) != Fraction(delta):
        raise ValueError(f"morphism has loop value {m.delta}, expected {delta}")
    return m


def _rank_of(morphisms: Sequence[Morphism]) -> int:
    index: dict[PairingDiagram, int] = {}
    for m in morphisms:
        for d in m.terms:
            index.setdefault(d, len(index))
    rows = []
    for m in morphisms:
        row = [Fraction(0)] * len(index)
        for d, c in m.terms.items():
            row[index[d]] = c
        rows.append(row)
    return rank(rows) if index else 0


def compressed_rank(p: Morphism, q: Morphism, delta=3, oriented: bool | None = None) -> int:
    """Dimension of ``q o Hom(source(p), source(q)) o p`` at a fixed loop value."""
    p, q = _fixed(p, delta), _fixed(q, delta)
    if oriented is None:
        oriented = p.oriented
    hom = [Morphism.from_diagram(b, p.target, q.source, 1, p.delta) for b in hom_basis(p.target, q.source, oriented)]
    return _rank_of([compose(compose(q, h), p) for h in hom])


def is_minimal(p: Projection, delta=3) -> bool:
    """True iff ``p End(v) p`` is one-dimensional at the rational loop value ``delta``."""
    e = _fixed(p.element, delta)
    if compose(e, e) != e:
        raise ValueError("is_minimal needs an idempotent")
    return compressed_rank(e, e, delta) == 1


# --- annular tangles -------------------------------------------------------


@dataclass(frozen=True)
class AnnularTangle:
    """An annular tangle from ``source`` to ``target`` in the implemented family.

    kind ``"rotation"`` (param = k), ``"cap"`` (join adjacent inner points
    ``param, param+1``), ``"cup"`` (insert an outer arc at ``param``) or
    ``"identity"``.
    """

    kind: str
    source: Word
    param: int = 0

    @property
    def target(self) -> Word:
        w, i = self.source, self.param
        if self.kind == "rotation":
            return rotate(w, i)
        if self.kind == "cap":
            return w[:i] + w[i + 2:]
        if self.kind == "identity":
            return w
        raise ValueError("cup tangles store their target explicitly")

    def apply(self, x: Morphism) -> Morphism:
        if x.color != self.source:
            raise ValueError(f"annular tangle expects color {self.source}, got {x.color}")
        terms: dict[PairingDiagram, object] = {}
        target = self.target
        for d, c in x.terms.items():
            nd, loops = self._act(d.pairs)
            key = PairingDiagram(target, nd, d.oriented)
            val = c * x.delta ** loops if loops else c
            terms[key] = terms[key] + val if key in terms else val
        return Morphism(Word(), target, terms, x.delta, x.oriented)

    def _act(self, p: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        n, i = len(p), self.param
        if self.kind == "identity":
            return p, 0
        if self.kind == "rotation":
            q = [0] * n
            for a, b in enumerate(p):
                q[(a - i) % n] = (b - i) % n
            return tuple(q), 0
        if self.kind == "cap":
            def shift(k):
                return k if k < i else k - 2

            if p[i] == i + 1:
                return tuple(shift(b) for a, b in enumerate(p) if a not in (i, i + 1)), 1
            q = list(p)
            a, b = p[i], p[i + 1]
            q[a], q[b] = b, a
            return tuple(shift(q[k]) for k in range(n) if k not in (i, i + 1)), 0
        raise AssertionError(self.kind)

    def adjoint(self) -> "AnnularTangle":
        if self.kind == "identity":
            return self
        if self.kind == "rotation":
            n = len(self.source)
            return AnnularTangle("rotation", self.target, (n - self.param) % n)
        if self.kind == "cap":
            return CupTangle("cup", self.target, self.param, self.source)
        raise AssertionError(self.kind)


@dataclass(frozen=True)
class CupTangle(AnnularTangle):
    full: Word = Word()

    @property
    def target(self) -> Word:
        return self.full

    def _act(self, p):
        i = self.param

        def shift(k):
            return k if k < i else k + 2

        q = [0] * (len(p) + 2)
        for a, b in enumerate(p):
            q[shift(a)] = shift(b)
        q[i], q[i + 1] = i + 1, i
        return tuple(q), 0

    def adjoint(self) -> AnnularTangle:
        return AnnularTangle("cap", self.full, self.param)


def annular_family(w1, w2) -> list[AnnularTangle]:
    """All implemented annular tangles ``w1 -> w2`` (rotations, single caps or cups)."""
    w1, w2 = Word.coerce(w1), Word.coerce(w2)
    out: list[AnnularTangle] = []
    n = len(w1)
    if w1 == w2:
        out.append(AnnularTangle("identity", w1))
    if len(w2) == n:
        out.extend(AnnularTangle("rotation", w1, k) for k in range(1, n) if rotate(w1, k) == w2)
    elif len(w2) == n - 2:
        for i in range(n - 1):
            if w1[i] != w1[i + 1] and w1[:i] + w1[i + 2:] == w2:
                out.append(AnnularTangle("cap", w1, i))
    elif len(w2) == n + 2:
        for i in range(n + 1):
            if w2[i] != w2[i + 1] and w2[:i] + w2[i + 2:] == w1:
                out.append(CupTangle("cup", w1, i, w2))
    return out


def annular_adjoint_check(w1, w2, samples: int = 50, seed: int = 0, delta=DELTA) -> dict:
    """Verify ``[A(X), Y]_{w2} == [X, A#(Y)]_{w1}`` for every tangle in the family."""
    w1, w2 = Word.coerce(w1), Word.coerce(w2)
    rng = random.Random(seed)
    b1 = [vector(d, 1, delta) for d in spanning_set(w1)]
    b2 = [vector(d, 1, delta) for d in spanning_set(w2)]
    pairs = [(x, y) for x in b1 for y in b2]
    if len(pairs) > samples:
        pairs = rng.sample(pairs, samples)
    family = annular_family(w1, w2)
    failures = []
    checked = 0
    for A in family:
        Ad = A.adjoint()
        for x, y in pairs:
            checked += 1
            lhs = inner_product(A.apply(x), y)
            rhs = inner_product(x, Ad.apply(y))
            if lhs != rhs:
                failures.append({"tangle": A.kind, "param": A.param, "lhs": str(lhs), "rhs": str(rhs)})
    report = {
        "check": "annular_adjoint",
        "word": f"{w1}->{w2}",
        "pass": not failures,
        "tangles": len(family),
        "cases": checked,
    }
    if failures:
        report["witness"] = failures[0]
    return report


# --- simple objects --------------------------------------------------------


def _unit_projection(delta) -> Morphism:
    return identity(Word(), delta)


def simple_objects(max_len: int, delta=3, verify_upto: int = 3) -> list[Word]:
    """Representatives of simple objects: the empty word and every word up to ``max_len``.

    Words of length ``<= verify_upto`` are checked pairwise: the compressed hom
    between ``f_vv(u)`` and ``f_vv(v)`` must vanish for ``u != v``.  A failed
    check raises ``AssertionError``.
    """
    words = [w for n in range(max_len + 1) for w in all_words(n)]
    small = [w for w in words if len(w) <= verify_upto]
    proj = {w: (f_vv(w, Fraction(delta)).element if len(w) else _unit_projection(Fraction(delta))) for w in small}
    for u, v in combinations(small, 2):
        r = compressed_rank(proj[u], proj[v], delta)
        if r:
            raise AssertionError(f"f_vv({u}) and f_vv({v}) are isomorphic (compressed rank {r})")
    return words


# --- form symmetries -------------------------------------------------------


def random_element(rng: random.Random, source, target, delta=DELTA, terms: int = 3, oriented: bool = True) -> Morphism:
    """A combination of up to ``terms`` basis diagrams with small nonzero integer coefficients."""
    source, target = Word.coerce(source), Word.coerce(target)
    basis = hom_basis(source, target, oriented)
    if not basis:
        return Morphism.zero(source, target, delta, oriented)
    picked = rng.sample(basis, min(terms, len(basis)))
    return Morphism(source, target, {d: rng.choice((-3, -2, -1, 1, 2, 3)) for d in picked}, delta, oriented)


def form_symmetry_check(max_len: int = 4, samples: int = 100, seed: int = 0, delta=DELTA) -> dict:
    """Rotation invariance of the form and left/right trace agreement on random endomorphisms.

    Each sample draws an object ``v`` with ``len(v) <= max_len``, two random
    endomorphisms ``x, y`` of ``v`` and a rotation amount ``k``; it checks
    ``tr_L(x) == tr_R(x)`` and ``[rho_k x, rho_k y] == [x, y]`` on the
    underlying vectors.
    """
    rng = random.Random(seed)
    objects = [w for n in range(max_len + 1) for w in all_words(n)]
    failures = []
    for _ in range(samples):
        v = rng.choice(objects)
        x = random_element(rng, v, v, delta)
        y = random_element(rng, v, v, delta)
        left, right = trace_close(x, Side.LEFT), trace_close(x, Side.RIGHT)
        if left != right:
            failures.append({"kind": "spherical", "object": str(v), "left": str(left), "right": str(right)})
        k = rng.randrange(2 * len(v) + 1)
        xv, yv = x.as_vector(), y.as_vector()
        before = inner_product(xv, yv)
        after = inner_product(rotate_element(xv, k), rotate_element(yv, k))
        if before != after:
            failures.append({"kind": "rotation", "object": str(v), "k": k, "before": str(before), "after": str(after)})
    report = {"check": "form_symmetry", "max_len": max_len, "samples": samples, "seed": seed, "pass": not failures}
    if failures:
        report["witness"] = failures[0]
    return report
