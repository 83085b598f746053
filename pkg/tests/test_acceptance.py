"""Acceptance criteria, one test each.

Every criterion records a ``PASS``/``FAIL`` line; ``conftest.py`` prints
them at the end of the pytest run, and running this file directly prints
them as they complete.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import pytest

from freetl.cli import main as cli_main
from freetl.coeff import DeltaMode, RationalFunction, quantum_int
from freetl.diagram import Side, compose, cup_cap, enumerate_oriented_tl, enumerate_unshaded_tl, identity, trace_close
from freetl.freext import (
    Projection,
    f_vv,
    form_compatibility_check,
    form_symmetry_check,
    is_minimal,
    jones_wenzl,
    overlay,
    phi,
    spanning_set,
)
from freetl.freeprod import realization_verify
from freetl.gram import gram_matrix
from freetl.linalg import leading_principal_minors
from freetl.ustl import embedding_check, iso_certificate, is_minimal_ustl, ustl_dim
from freetl.word import Word, WordClass, all_words, alternating, balanced_words, classify

from oracles import arcs_of, brute_matchings, catalan

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    if __name__ == "__main__":
        print(line, flush=True)


def criterion_1():
    oriented = [len(enumerate_oriented_tl(alternating(2 * n))) for n in range(1, 7)]
    brute = [len(brute_matchings(str(alternating(2 * n)))) for n in range(1, 7)]
    same_sets = all(
        {arcs_of(d) for d in enumerate_oriented_tl(alternating(2 * n))} == brute_matchings(str(alternating(2 * n)))
        for n in range(1, 6)
    )
    unshaded = [len(enumerate_unshaded_tl(2 * k)) for k in range(7)]
    unshaded_brute = [len(brute_matchings("+" * (2 * k), oriented=False)) for k in range(7)]
    ok = (
        oriented == brute == [1, 2, 5, 14, 42, 132]
        and same_sets
        and unshaded == unshaded_brute == [catalan(k) for k in range(7)]
    )
    return ok, f"oriented {oriented}, unshaded {unshaded}"


def criterion_2():
    bad = []
    count = 0
    for d in (Fraction(2), Fraction(5, 2), Fraction(3)):
        for w in balanced_words(6):
            count += 1
            minors = leading_principal_minors(gram_matrix(w, mode=DeltaMode.fixed(d)).matrix)
            if not all(m > 0 for m in minors):
                bad.append((str(w), str(d)))
    return not bad, f"{count} Gram matrices" + (f", failures {bad[:3]}" if bad else "")


def criterion_3():
    words = [w for w in balanced_words(8) if classify(w) is WordClass.SAME_ENDS]
    problems = []
    diagrams = 0
    for w in words:
        seen = set()
        for X in spanning_set(w):
            diagrams += 1
            try:
                wit = phi(w, X)
            except AssertionError as exc:
                problems.append(str(exc))
                continue
            if overlay(w, wit.odd_part, wit.even_part) != X:
                problems.append(f"{w}: overlay(phi(X)) != X")
            seen.add((wit.odd_part, wit.even_part))
        if len(seen) != len(spanning_set(w)):
            problems.append(f"{w}: phi not injective")
        if not form_compatibility_check(w)["pass"]:
            problems.append(f"{w}: form compatibility")
    return not problems, f"{len(words)} words, {diagrams} diagrams" + (f", {problems[:2]}" if problems else "")


def criterion_4():
    problems = []
    for n in range(6):
        for sign in (1, -1):
            p = jones_wenzl(n, sign)
            f = p.element
            if not (p.is_idempotent() and p.is_self_adjoint()):
                problems.append(f"f_{n}^{sign}: projection")
            for i in range(n - 1):
                e = cup_cap(p.word, i)
                if not (compose(e, f).is_zero() and compose(f, e).is_zero()):
                    problems.append(f"f_{n}^{sign}: e_{i}")
            expected = RationalFunction(quantum_int(n + 1))
            if not (trace_close(f, Side.LEFT) == trace_close(f, Side.RIGHT) == expected):
                problems.append(f"f_{n}^{sign}: trace")
    return not problems, "n = 0..5, both signs" + (f", {problems[:3]}" if problems else "")


def criterion_5():
    d = Fraction(3)
    words = [v for n in range(1, 4) for v in all_words(n)]
    not_minimal = [str(v) for v in words if not is_minimal(f_vv(v, d), d)]
    control = is_minimal(Projection(Word.parse("+-+-"), identity("+-+-", d)), d)
    return not not_minimal and not control, f"{len(words)} words minimal, identity on +-+- minimal={control}"


def criterion_6():
    report = embedding_check(6, samples=100, seed=0)
    injective = all(
        len({d.unshaded() for d in enumerate_oriented_tl(w)}) == len(enumerate_oriented_tl(w))
        for w in balanced_words(8)
    )
    return report["pass"] and injective, f"counts {report['counts']}, injective up to 8: {injective}"


def criterion_7():
    dims = (ustl_dim("++"), ustl_dim("--"))
    cert = iso_certificate(3)
    ff = is_minimal_ustl(f_vv("++", Fraction(3)), 3)
    ok = dims == (1, 1) and cert["pass"] and not ff
    return ok, f"dims {dims}, u*u=1 {cert['u_star_u_identity']}, uu*=1 {cert['u_u_star_identity']}, f_vv(++) minimal={ff}"


def criterion_8():
    counts = realization_verify(8)
    ranks = realization_verify(6, gram=True, delta=3)
    return counts["pass"] and ranks["pass"], f"{len(counts['words'])} words counted, {len(ranks['words'])} ranked"


def criterion_9():
    report = form_symmetry_check(4, samples=100, seed=0)
    return report["pass"], "100 seeded endomorphisms" + (f", witness {report.get('witness')}" if not report["pass"] else "")


def criterion_10(tmp_path):
    a, b = tmp_path / "first.json", tmp_path / "second.json"
    codes = [cli_main(["verify", "--seed", "0", "--output", str(p)]) for p in (a, b)]
    same = a.read_bytes() == b.read_bytes()
    return same and codes == [0, 0], f"exit codes {codes}, identical={same}, {len(a.read_bytes())} bytes"


CRITERIA = {
    1: ("dimension suite", criterion_1),
    2: ("Gram positivity at delta in {2, 5/2, 3}", criterion_2),
    3: ("MAS overlay and form compatibility", criterion_3),
    4: ("Jones-Wenzl identities", criterion_4),
    5: ("minimality of block projections", criterion_5),
    6: ("embedding into unshaded TL", criterion_6),
    7: ("unshaded structure", criterion_7),
    8: ("free-product realization counts", criterion_8),
    9: ("rotation invariance and sphericality", criterion_9),
    10: ("verify determinism", criterion_10),
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, tmp_path):
    title, fn = CRITERIA[number]
    ok, detail = fn(tmp_path) if number == 10 else fn()
    record(number, title, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    failed = 0
    for number in sorted(CRITERIA):
        title, fn = CRITERIA[number]
        with tempfile.TemporaryDirectory() as tmp:
            ok, detail = fn(Path(tmp)) if number == 10 else fn()
        record(number, title, ok, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
