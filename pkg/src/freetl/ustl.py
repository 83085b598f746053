"""Unshaded Temperley-Lieb and the embedding of the free oriented extension into it.

Unshaded elements are ordinary :class:`~freetl.diagram.Morphism` objects whose
diagrams have ``oriented=False``: signs stay on the colors for bookkeeping but
any two points may be paired.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coeff import DELTA
from .diagram import (
    Morphism,
    PairingDiagram,
    compose,
    enumerate_oriented_tl,
    enumerate_unshaded_tl,
    hom_basis,
    identity,
    inner_product,
    rotate_element,
    star,
    tensor,
    vector,
)
from .freext import Projection, compressed_rank, f_vv, jones_wenzl, random_element
from .word import Sign, Word, all_words, alternating, balanced_words

__all__ = [
    "forget_orientation",
    "ustl_dim",
    "straight_strands",
    "iso_f_plusminus",
    "iso_certificate",
    "is_minimal_ustl",
    "ustl_simples",
    "embedding_check",
]

UstlElement = Morphism


def forget_orientation(x: Morphism) -> Morphism:
    """Send each oriented diagram to the same pairing viewed as an unshaded diagram."""
    return Morphism(x.source, x.target, {d.unshaded(): c for d, c in x.terms.items()}, x.delta, False)


def ustl_dim(w) -> int:
    w = Word.coerce(w)
    return len(enumerate_unshaded_tl(len(w), w))


def straight_strands(source, target, delta=DELTA) -> Morphism:
    """Unshaded diagram joining bottom point ``i`` to top point ``i``."""
    source, target = Word.coerce(source), Word.coerce(target)
    if len(source) != len(target):
        raise ValueError("straight strands need equal lengths")
    n = len(source)
    pairs = tuple(2 * n - 1 - i for i in range(2 * n))
    d = PairingDiagram._make(target + source.star(), pairs, False)
    return Morphism(source, target, {d: 1}, delta, False)


def iso_f_plusminus(delta=3, length: int = 2) -> Morphism:
    """Unitary ``u`` from the alternating word starting with ``-`` to the one starting with ``+``.

    ``u* u`` and ``u u*`` are identities in USTL, so the block projections on
    the two alternating words are isomorphic there.
    """
    return straight_strands(alternating(length, Sign.MINUS), alternating(length, Sign.PLUS), Fraction(delta))


def iso_certificate(delta=3, length: int = 2) -> dict:
    u = iso_f_plusminus(delta, length)
    src, tgt = u.source, u.target
    d = Fraction(delta)
    left = compose(star(u), u) == identity(src, d, False)
    right = compose(u, star(u)) == identity(tgt, d, False)
    p_minus = forget_orientation(f_vv(src, d).element)
    p_plus = forget_orientation(f_vv(tgt, d).element)
    hom_dim = compressed_rank(p_minus, p_plus, d, oriented=False)
    return {
        "check": "ustl_iso",
        "word": f"{src}->{tgt}",
        "u_star_u_identity": left,
        "u_u_star_identity": right,
        "compressed_hom_dim": hom_dim,
        "pass": left and right and hom_dim == 1,
    }


def is_minimal_ustl(p: Projection | Morphism, delta=3) -> bool:
    """Minimality of an (oriented or unshaded) projection inside USTL."""
    e = p.element if isinstance(p, Projection) else p
    e = forget_orientation(e) if e.oriented else e
    return compressed_rank(e, e, delta, oriented=False) == 1


def ustl_simples(max_n: int, delta=3, verify_upto: int = 2) -> list[int]:
    """Labels ``0 .. max_n`` of simple objects; JW images up to ``verify_upto`` are checked.

    Each checked label must be minimal in USTL and have zero compressed hom to
    every other checked label; otherwise ``AssertionError`` is raised.
    """
    d = Fraction(delta)
    labels = list(range(max_n + 1))
    checked = [n for n in labels if n <= verify_upto]
    proj = {n: forget_orientation(jones_wenzl(n, Sign.PLUS, d).element) for n in checked}
    for n in checked:
        if compressed_rank(proj[n], proj[n], d, oriented=False) != 1:
            raise AssertionError(f"JW_{n} is not minimal in USTL at delta={d}")
        for m in checked:
            if m < n and compressed_rank(proj[m], proj[n], d, oriented=False):
                raise AssertionError(f"JW_{m} and JW_{n} are isomorphic in USTL")
    return labels


def _splits(max_len: int):
    """Every (source, target) pair with a nonempty oriented hom space and ``|s| + |t| <= max_len``."""
    for w in balanced_words(max_len):
        for k in range(len(w) + 1):
            yield w[k:].star(), w[:k]


def embedding_check(max_len: int = 6, samples: int = 100, seed: int = 0, delta=DELTA) -> dict:
    """Check that forgetting orientation is an injective structure-preserving map.

    Exhaustive part: for basis diagrams of every balanced color up to
    ``max_len`` the images are distinct unshaded diagrams, and forgetting
    commutes with star, rotation, the inner product, tensor products and
    composition (whenever all colors involved stay within ``max_len``).
    Random part: ``samples`` seeded chains of three operations applied in
    parallel to an element and its image.
    """
    failures: list[dict] = []
    counts = {"injective": 0, "star": 0, "rotate": 0, "inner": 0, "tensor": 0, "compose": 0, "random": 0}

    def fail(kind, **info):
        failures.append({"kind": kind, **info})

    vectors: dict[Word, list[Morphism]] = {}
    for w in balanced_words(max_len):
        basis = enumerate_oriented_tl(w)
        images = [d.unshaded() for d in basis]
        allowed = set(enumerate_unshaded_tl(len(w), w))
        counts["injective"] += 1
        if len(set(images)) != len(images) or not set(images) <= allowed:
            fail("injective", word=str(w))
        vs = vectors[w] = [vector(d, 1, delta) for d in basis]
        for x in vs:
            fx = forget_orientation(x)
            counts["star"] += 1
            if forget_orientation(star(x)) != star(fx):
                fail("star", word=str(w))
            for k in range(len(w) + 1):
                counts["rotate"] += 1
                if forget_orientation(rotate_element(x, k)) != rotate_element(fx, k):
                    fail("rotate", word=str(w), k=k)
            for y in vs:
                counts["inner"] += 1
                if inner_product(x, y) != inner_product(fx, forget_orientation(y)):
                    fail("inner", word=str(w))
    for a, xs in vectors.items():
        for b, ys in vectors.items():
            if len(a) + len(b) > max_len:
                continue
            for x in xs:
                for y in ys:
                    counts["tensor"] += 1
                    if forget_orientation(tensor(x, y)) != tensor(forget_orientation(x), forget_orientation(y)):
                        fail("tensor", left=str(a), right=str(b))
    homs: dict[tuple[Word, Word], list[Morphism]] = {}
    for s, t in _splits(max_len):
        homs[s, t] = [Morphism.from_diagram(d, s, t, 1, delta) for d in hom_basis(s, t)]
    for (s, t), fs in homs.items():
        for (u, s2), gs in homs.items():
            if s2 != s:
                continue
            for f in fs:
                for g in gs:
                    counts["compose"] += 1
                    lhs = forget_orientation(compose(f, g))
                    if lhs != compose(forget_orientation(f), forget_orientation(g)):
                        fail("compose", path=f"{u}->{s}->{t}")

    rng = random.Random(seed)
    small = [st for st in _splits(min(max_len, 4))]
    for i in range(samples if small else 0):
        s, t = rng.choice(small)
        x = random_element(rng, s, t, delta)
        fx = forget_orientation(x)
        trail = []
        for _ in range(3):
            op = rng.choice(("star", "tensor", "compose", "rotate"))
            if op == "star":
                x, fx = star(x), star(fx)
            elif op == "rotate":
                k = rng.randrange(len(x.color) + 1)
                x, fx = rotate_element(x, k), rotate_element(fx, k)
            elif op == "tensor":
                s2, t2 = rng.choice(small)
                if len(x.color) + len(s2) + len(t2) > 8:
                    op = "skip"
                else:
                    y = random_element(rng, s2, t2, delta)
                    x, fx = tensor(x, y), tensor(fx, forget_orientation(y))
            else:
                starts = [u for n in range(0, 5) for u in all_words(n) if hom_basis(u, x.source)]
                u = rng.choice(starts)
                if len(x.source) + len(u) > 8:
                    op = "skip"
                else:
                    g = random_element(rng, u, x.source, delta)
                    x, fx = compose(x, g), compose(fx, forget_orientation(g))
            trail.append(op)
        counts["random"] += 1
        if forget_orientation(x) != fx:
            fail("random", sample=i, ops=trail)

    report = {"check": "embedding", "max_len": max_len, "seed": seed, "pass": not failures, "counts": counts}
    if failures:
        report["witness"] = failures[0]
    return report
