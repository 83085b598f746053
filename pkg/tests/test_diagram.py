import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from freetl.coeff import DELTA
from freetl.diagram import (
    Morphism,
    PairingDiagram,
    Side,
    compose,
    counit,
    cup_cap,
    enumerate_oriented_tl,
    enumerate_unshaded_tl,
    hom_basis,
    identity,
    inner_product,
    is_noncrossing,
    rotate_element,
    star,
    tensor,
    trace_close,
    unit,
    vector,
)
from freetl.freext import jones_wenzl, random_element
from freetl.word import Word, all_words, alternating, balanced_words, rotate

from oracles import arcs_of, brute_matchings, catalan, glue, loops_between

EMPTY = Word()


def diagram(word, arcs, oriented=True):
    return PairingDiagram.from_arcs(word, arcs, oriented)


def test_enumeration_examples():
    assert [d.arcs for d in enumerate_oriented_tl(Word.parse("+-"))] == [((0, 1),)]
    assert [d.arcs for d in enumerate_oriented_tl(Word.parse("+-+-"))] == [((0, 1), (2, 3)), ((0, 3), (1, 2))]
    assert [d.arcs for d in enumerate_oriented_tl(Word.parse("++--"))] == [((0, 3), (1, 2))]
    assert enumerate_oriented_tl(Word.parse("++")) == ()
    assert [len(enumerate_unshaded_tl(n)) for n in (2, 3, 4)] == [1, 0, 2]


def test_oriented_enumeration_matches_brute_force():
    for n in range(0, 11, 2):
        for w in all_words(n):
            got = {arcs_of(d) for d in enumerate_oriented_tl(w)}
            assert len(got) == len(enumerate_oriented_tl(w))
            assert got == brute_matchings(str(w), oriented=True)


def test_unshaded_enumeration_matches_brute_force():
    for n in range(0, 11):
        got = {arcs_of(d) for d in enumerate_unshaded_tl(n)}
        assert got == brute_matchings("+" * n, oriented=False)
        assert len(got) == (catalan(n // 2) if n % 2 == 0 else 0)


def test_alternating_counts_are_catalan():
    for n in range(1, 7):
        assert len(enumerate_oriented_tl(alternating(2 * n))) == catalan(n)


def test_canonical_order():
    for w in balanced_words(8):
        keys = [d.arcs for d in enumerate_oriented_tl(w)]
        assert keys == sorted(keys)


def test_diagram_validation():
    with pytest.raises(ValueError):
        diagram("+-+-", [(0, 2), (1, 3)])  # crossing
    with pytest.raises(ValueError):
        diagram("++--", [(0, 1), (2, 3)])  # sign rule
    diagram("++--", [(0, 1), (2, 3)], oriented=False)
    with pytest.raises(ValueError):
        PairingDiagram(Word.parse("+-"), (0, 1))  # fixed points
    assert is_noncrossing((1, 0, 3, 2)) and not is_noncrossing((2, 3, 0, 1))


def test_json_round_trip():
    d = diagram("+-+-", [(0, 1), (2, 3)])
    assert d.to_json() == {"word": "+-+-", "pairs": [[0, 1], [2, 3]]}
    assert PairingDiagram.from_json(d.to_json()) == d
    u = d.unshaded()
    assert u.to_json()["mode"] == "unshaded"
    assert PairingDiagram.from_json(u.to_json()) == u
    f = jones_wenzl(3, 1).element
    assert Morphism.from_json(f.to_json()) == f


def test_compose_examples():
    x = vector(diagram("+-+-", [(0, 3), (1, 2)]))
    assert compose(identity("+-+-"), x) == x
    cap, cup = counit("+"), unit("+")
    assert compose(cap, cup).scalar() == DELTA
    e = cup_cap("+-", 0)
    assert compose(e, e) == DELTA * e
    with pytest.raises(ValueError):
        compose(identity("+-"), identity("-+"))


def test_tensor_examples():
    assert tensor(identity("+"), identity("-")) == identity("+-")
    x = jones_wenzl(2, 1).element
    assert tensor(x, identity(EMPTY)) == x == tensor(identity(EMPTY), x)
    cup = vector(diagram("+-", [(0, 1)]))
    assert tensor(cup, cup) == vector(diagram("+-+-", [(0, 1), (2, 3)]))


def test_star_examples():
    d1 = vector(diagram("+-", [(0, 1)]))
    assert star(d1).as_vector() == d1
    d2 = vector(diagram("+-+-", [(0, 1), (2, 3)]))
    assert star(d2).as_vector() == d2


def test_rotate_example():
    x = vector(diagram("+-+-", [(0, 1), (2, 3)]))
    assert rotate_element(x, 1) == vector(diagram("-+-+", [(0, 3), (1, 2)]))
    assert rotate_element(x, 0) == x


def test_inner_product_examples():
    e1 = vector(diagram("+-+-", [(0, 1), (2, 3)]))
    e2 = vector(diagram("+-+-", [(0, 3), (1, 2)]))
    assert inner_product(e1, e1) == DELTA**2
    assert inner_product(e1, e2) == DELTA
    empty = vector(PairingDiagram(EMPTY, ()))
    assert inner_product(empty, empty) == 1
    with pytest.raises(ValueError):
        inner_product(e1, vector(diagram("-+-+", [(0, 1), (2, 3)])))


def test_trace_examples():
    for side in Side:
        assert trace_close(identity("+"), side) == DELTA
        assert trace_close(cup_cap("+-", 0), side) == DELTA
        assert trace_close(jones_wenzl(2, 1).element, side) == DELTA**2 - 1
    with pytest.raises(ValueError):
        trace_close(Morphism.from_diagram(diagram("+-", [(0, 1)])))


def test_inner_product_loops_match_oracle():
    for w in balanced_words(8):
        basis = enumerate_oriented_tl(w)
        for a in basis:
            assert inner_product(vector(a), vector(a)) == DELTA ** (len(w) // 2)
            for b in basis:
                expected = DELTA ** loops_between(a.arcs, b.arcs)
                assert inner_product(vector(a), vector(b)) == expected


def _hom_pairs(max_len):
    for w in balanced_words(max_len):
        for k in range(len(w) + 1):
            yield w[k:].star(), w[:k]


def test_composition_matches_gluing_oracle():
    homs = {}
    for s, t in _hom_pairs(6):
        homs.setdefault((s, t), hom_basis(s, t))
    checked = 0
    for (u, v), fs in homs.items():
        for (t, u2), gs in homs.items():
            if u2 != u:
                continue
            for df in fs:
                for dg in gs:
                    f = Morphism.from_diagram(df, u, v)
                    g = Morphism.from_diagram(dg, t, u)
                    arcs, loops = glue(df.arcs, len(v), len(u), dg.arcs, len(u), len(t))
                    (d, c), = compose(f, g).terms.items()
                    assert frozenset(d.arcs) == arcs
                    assert c == DELTA**loops
                    checked += 1
    assert checked > 1000


def _random_chain(rng, n_max=3):
    objs = [w for n in range(n_max + 1) for w in all_words(n)]
    while True:
        a, b, c, d = (rng.choice(objs) for _ in range(4))
        if hom_basis(a, b) and hom_basis(b, c) and hom_basis(c, d):
            return a, b, c, d


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_composition_associative_and_star_reverses(seed):
    rng = random.Random(seed)
    a, b, c, d = _random_chain(rng)
    h = random_element(rng, a, b)
    g = random_element(rng, b, c)
    f = random_element(rng, c, d)
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert star(compose(f, g)) == compose(star(g), star(f))
    assert star(star(f)) == f


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_rotation_invariance_and_sphericality(seed):
    rng = random.Random(seed)
    v = rng.choice([w for n in range(5) for w in all_words(n)])
    x, y = random_element(rng, v, v), random_element(rng, v, v)
    assert trace_close(x, Side.LEFT) == trace_close(x, Side.RIGHT)
    k = rng.randrange(2 * len(v) + 1)
    xv, yv = x.as_vector(), y.as_vector()
    assert inner_product(rotate_element(xv, k), rotate_element(yv, k)) == inner_product(xv, yv)


def test_full_rotation_is_identity():
    for w in balanced_words(6):
        for d in enumerate_oriented_tl(w):
            x = vector(d)
            n = len(w)
            for k in range(n + 1):
                assert rotate_element(rotate_element(x, k), n - k) == x
                assert rotate_element(x, k).color == rotate(w, k)


def test_fixed_delta_morphisms():
    d3 = Fraction(3)
    f = jones_wenzl(2, 1, d3).element
    assert f == jones_wenzl(2, 1).element.evaluate(3)
    assert compose(f, f) == f
    with pytest.raises(ValueError):
        compose(f, jones_wenzl(2, 1).element)


def test_mixed_modes_rejected():
    a = identity("+-")
    b = identity("+-", oriented=False)
    with pytest.raises(ValueError):
        compose(a, b)
    with pytest.raises(ValueError):
        tensor(a, b)


def test_morphism_drops_zero_terms():
    d = diagram("+-", [(0, 1)])
    m = Morphism(EMPTY, "+-", [(d, 1), (d, -1)])
    assert m.is_zero() and m == Morphism.zero(EMPTY, "+-")
