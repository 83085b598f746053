from fractions import Fraction

import pytest
import sympy

from freetl.coeff import DELTA
from freetl.diagram import (
    PairingDiagram,
    Side,
    compose,
    cup_cap,
    enumerate_oriented_tl,
    identity,
    tensor,
    trace_close,
)
from freetl.freext import (
    AnnularTangle,
    OverlayAssertionError,
    Projection,
    SingularityError,
    TemperleyLieb,
    annular_adjoint_check,
    annular_family,
    compressed_rank,
    f_vv,
    form_compatibility_check,
    form_symmetry_check,
    is_minimal,
    jones_wenzl,
    overlay,
    overlay_spanning_set,
    parity_classes,
    phi,
    spanning_set,
    simple_objects,
)
from freetl.word import Word, WordClass, all_words, balanced_words, classify, mas_parity_split

from oracles import quantum_int_oracle, to_sympy


def same_ends_words(max_len):
    return [w for w in balanced_words(max_len) if classify(w) is WordClass.SAME_ENDS]


def test_spanning_set_examples():
    assert len(spanning_set("+--+")) == 1
    assert len(spanning_set("")) == 1
    assert set(overlay_spanning_set("+-+--+")) == set(spanning_set("+-+--+"))


def test_overlay_recursion_equals_enumeration():
    for w in balanced_words(10):
        rec = overlay_spanning_set(w)
        assert len(rec) == len(set(rec))
        assert set(rec) == set(enumerate_oriented_tl(w))


def test_phi_example():
    w = Word.parse("+--+")
    X = PairingDiagram.from_arcs(w, [(0, 1), (2, 3)])
    wit = phi(w, X)
    assert wit.odd_part == PairingDiagram.from_arcs("+-", [(0, 1)])
    assert wit.even_part == PairingDiagram.from_arcs("-+", [(0, 1)])


def test_phi_rejects_cross_parity_arcs():
    w = Word.parse("+--+")
    bad = PairingDiagram.from_arcs(w, [(0, 3), (1, 2)], oriented=False)
    with pytest.raises(OverlayAssertionError):
        phi(w, bad)
    with pytest.raises(ValueError):
        phi("+-+-", PairingDiagram.from_arcs("+-+-", [(0, 1), (2, 3)]))


def test_overlay_rejects_interleaving_parts():
    w = Word.parse("+--++--+")
    odd = PairingDiagram.from_arcs("+-+-", [(0, 3), (1, 2)])
    even = PairingDiagram.from_arcs("-+-+", [(0, 3), (1, 2)])
    assert overlay(w, odd, even) is None
    ok = overlay(w, odd, PairingDiagram.from_arcs("-+-+", [(0, 1), (2, 3)]))
    assert ok is not None and ok.arcs == ((0, 5), (1, 4), (2, 3), (6, 7))


def test_phi_overlay_round_trip_and_injectivity():
    for w in same_ends_words(8):
        parts = set()
        for X in spanning_set(w):
            wit = phi(w, X)
            cls = parity_classes(w)
            assert all(cls[i] == cls[j] for i, j in X.arcs)
            assert overlay(w, wit.odd_part, wit.even_part) == X
            parts.add((wit.odd_part, wit.even_part))
        assert len(parts) == len(spanning_set(w))


def test_dimension_bound_by_parts():
    for w in same_ends_words(10):
        w_odd, w_even = mas_parity_split(w)
        assert len(spanning_set(w)) <= len(spanning_set(w_odd)) * len(spanning_set(w_even))


def test_form_compatibility():
    for w in same_ends_words(8):
        report = form_compatibility_check(w)
        assert report["pass"], report


def test_alternating_basis_guard():
    with pytest.raises(ValueError):
        TemperleyLieb().alternating_basis(Word.parse("+--+"))


def test_jw_two_explicit():
    f2 = jones_wenzl(2, 1).element
    expected = identity("+-") - (1 / DELTA) * cup_cap("+-", 0)
    assert f2 == expected
    assert trace_close(f2) == DELTA**2 - 1


@pytest.mark.parametrize("sign", [1, -1])
def test_jw_identities(sign):
    for n in range(6):
        p = jones_wenzl(n, sign)
        f = p.element
        assert p.is_idempotent() and p.is_self_adjoint()
        for i in range(n - 1):
            e = cup_cap(p.word, i)
            assert compose(e, f).is_zero() and compose(f, e).is_zero()
        for side in Side:
            tr = trace_close(f, side)
            assert sympy.expand(to_sympy(tr) - quantum_int_oracle(n + 1)) == 0


def test_jw_term_counts_are_catalan():
    assert [len(jones_wenzl(n, 1).element.terms) for n in range(1, 6)] == [1, 2, 5, 14, 42]


def test_jw_singular_delta():
    # [3] = d^2 - 1 vanishes at d = 1
    with pytest.raises(SingularityError):
        jones_wenzl(3, 1, Fraction(1))
    with pytest.raises(ValueError):
        jones_wenzl(-1)


def test_jw_fixed_delta_agrees_with_symbolic():
    for n in range(5):
        assert jones_wenzl(n, -1, Fraction(5, 2)).element == jones_wenzl(n, -1).element.evaluate(Fraction(5, 2))


def test_f_vv_examples():
    assert f_vv("+").element == identity("+")
    assert f_vv("+-").element == jones_wenzl(2, 1).element
    assert f_vv("++").element == identity("++")
    assert f_vv("+-+--").element == tensor(jones_wenzl(4, 1).element, jones_wenzl(1, -1).element)
    with pytest.raises(ValueError):
        f_vv("")


def test_f_vv_projections_up_to_four():
    for n in range(1, 5):
        for v in all_words(n):
            p = f_vv(v)
            assert p.is_idempotent() and p.is_self_adjoint()


def test_minimality():
    for n in range(1, 4):
        for v in all_words(n):
            assert is_minimal(f_vv(v, Fraction(3)), 3)
    assert not is_minimal(Projection(Word.parse("+-+-"), identity("+-+-", Fraction(3))), 3)
    with pytest.raises(ValueError):
        is_minimal(Projection(Word.parse("+-"), 2 * identity("+-", Fraction(3))), 3)


def test_minimality_symbolic_input_is_specialized():
    assert is_minimal(f_vv("+-"), 3)
    assert compressed_rank(f_vv("+").element, f_vv("-").element) == 0


def test_annular_family_and_adjoints():
    fam = annular_family("+-+-", "+-")
    assert {t.kind for t in fam} == {"cap"}
    for t in fam:
        assert t.adjoint().kind == "cup" and t.adjoint().adjoint() == t
    rot = AnnularTangle("rotation", Word.parse("+--+"), 1)
    assert rot.target == Word.parse("--++")
    assert rot.adjoint().adjoint().param == 1


@pytest.mark.parametrize(
    "w1, w2", [("+-+-", "+-"), ("+-", "+-+-"), ("+--+", "-++-"), ("+-+-", "+-+-"), ("+-+--+", "+--+")]
)
def test_annular_adjoint(w1, w2):
    report = annular_adjoint_check(w1, w2)
    assert report["pass"] and report["tangles"] >= 1, report


def test_simple_objects():
    assert [str(w) for w in simple_objects(1)] == ["", "+", "-"]
    assert len(simple_objects(2)) == 7
    assert len(simple_objects(3)) == 15


def test_form_symmetry_check():
    assert form_symmetry_check(4, samples=50, seed=3)["pass"]
