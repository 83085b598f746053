"""Invariant suites behind ``freetl verify``.

Each suite returns a plain dict ``{"suite", "status", "checks", ...}`` where
status is ``"pass"``, ``"fail"`` (with a ``"witness"``) or ``"skipped"`` when
the length bound leaves nothing to check.  A skipped suite never counts as a
pass; the run passes when nothing failed and at least one check ran.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .coeff import DeltaMode, RationalFunction, quantum_int
from .diagram import Side, compose, cup_cap, enumerate_oriented_tl, identity, trace_close
from .freext import (
    Projection,
    annular_adjoint_check,
    annular_family,
    f_vv,
    form_compatibility_check,
    form_symmetry_check,
    is_minimal,
    jones_wenzl,
    overlay,
    overlay_spanning_set,
    phi,
    spanning_set,
)
from .freeprod import realization_verify
from .gram import gram_matrix
from .linalg import is_positive_definite, leading_principal_minors
from .ustl import embedding_check, iso_certificate, is_minimal_ustl, ustl_dim
from .word import Word, WordClass, all_words, balanced_words, classify

__all__ = ["SuiteConfig", "SUITES", "run_suites"]

POSITIVITY_DELTAS = (Fraction(2), Fraction(5, 2), Fraction(3))


@dataclass(frozen=True)
class SuiteConfig:
    max_len: int = 8
    seed: int = 0
    delta: Fraction | None = None
    samples: int = 100
    inject_fault: str | None = None


def _result(name: str, checks: int, failures: list, **extra) -> dict:
    status = "fail" if failures else ("pass" if checks else "skipped")
    out = {"suite": name, "status": status, "checks": checks, **extra}
    if failures:
        out["witness"] = failures[0]
    return out


def positivity(cfg: SuiteConfig) -> dict:
    deltas = (cfg.delta,) if cfg.delta is not None else POSITIVITY_DELTAS
    failures, checks = [], 0
    for d in deltas:
        for w in balanced_words(min(cfg.max_len, 6)):
            mat = gram_matrix(w, mode=DeltaMode.fixed(d)).matrix
            if cfg.inject_fault == "gram" and checks == 0:
                mat[0][0] = -mat[0][0]
            checks += 1
            symmetric = all(mat[i][j] == mat[j][i] for i in range(len(mat)) for j in range(i))
            if not (symmetric and is_positive_definite(mat)):
                minors = leading_principal_minors(mat)
                failures.append({"word": str(w), "delta": str(d), "symmetric": symmetric, "minors": [str(m) for m in minors]})
    return _result("positivity", checks, failures, deltas=[str(d) for d in deltas])


def mas_assertion(cfg: SuiteConfig) -> dict:
    failures, checks = [], 0
    for w in balanced_words(min(cfg.max_len, 8)):
        checks += 1
        if set(overlay_spanning_set(w)) != set(enumerate_oriented_tl(w)):
            failures.append({"word": str(w), "problem": "overlay recursion disagrees with enumeration"})
        if classify(w) is not WordClass.SAME_ENDS:
            continue
        seen = set()
        for X in spanning_set(w):
            checks += 1
            try:
                wit = phi(w, X)
            except AssertionError as exc:
                failures.append({"word": str(w), "diagram": X.to_json(), "problem": str(exc)})
                continue
            if overlay(w, wit.odd_part, wit.even_part) != X:
                failures.append({"word": str(w), "diagram": X.to_json(), "problem": "overlay(phi(X)) != X"})
            key = (wit.odd_part, wit.even_part)
            if key in seen:
                failures.append({"word": str(w), "diagram": X.to_json(), "problem": "phi is not injective"})
            seen.add(key)
    return _result("mas_assertion", checks, failures)


def form_compatibility(cfg: SuiteConfig) -> dict:
    failures, checks = [], 0
    for w in balanced_words(min(cfg.max_len, 8)):
        if classify(w) is not WordClass.SAME_ENDS:
            continue
        rep = form_compatibility_check(w)
        checks += rep["pairs"]
        if not rep["pass"]:
            failures.append(rep["witness"])
    return _result("form_compatibility", checks, failures)


def annular_adjoint(cfg: SuiteConfig) -> dict:
    failures, checks = [], 0
    words = balanced_words(min(cfg.max_len, 6))
    for w1 in words:
        for w2 in words:
            if not annular_family(w1, w2):
                continue
            rep = annular_adjoint_check(w1, w2, samples=20, seed=cfg.seed)
            checks += rep["cases"]
            if not rep["pass"]:
                failures.append({"word": rep["word"], **rep["witness"]})
    return _result("annular_adjoint", checks, failures)


def jones_wenzl_identities(cfg: SuiteConfig) -> dict:
    failures, checks = [], 0
    for n in range(min(cfg.max_len, 5) + 1):
        for sign in (1, -1):
            p = jones_wenzl(n, sign)
            f = p.element
            checks += 1
            problems = []
            if not p.is_idempotent():
                problems.append("not idempotent")
            if not p.is_self_adjoint():
                problems.append("not self-adjoint")
            for i in range(n - 1):
                e = cup_cap(p.word, i)
                if not (compose(e, f).is_zero() and compose(f, e).is_zero()):
                    problems.append(f"not killed by e_{i}")
            expected = RationalFunction(quantum_int(n + 1))
            for side in Side:
                if trace_close(f, side) != expected:
                    problems.append(f"{side.value} trace differs from [{n + 1}]")
            if problems:
                failures.append({"n": n, "sign": "+" if sign > 0 else "-", "problems": problems})
    return _result("jones_wenzl", checks, failures)


def minimality(cfg: SuiteConfig) -> dict:
    d = cfg.delta if cfg.delta is not None else Fraction(3)
    failures, checks = [], 0
    checks += 1
    if not is_minimal(Projection(Word(), identity(Word(), d)), d):
        failures.append({"word": "", "problem": "identity of the empty word is not minimal"})
    for n in range(1, min(cfg.max_len, 3) + 1):
        for v in all_words(n):
            checks += 1
            if not is_minimal(f_vv(v, d), d):
                failures.append({"word": str(v), "problem": "f_vv is not minimal"})
    if cfg.max_len >= 4:
        checks += 1
        control = Projection(Word.parse("+-+-"), identity("+-+-", d))
        if is_minimal(control, d):
            failures.append({"word": "+-+-", "problem": "identity reported minimal"})
    return _result("minimality", checks, failures, delta=str(d))


def embedding(cfg: SuiteConfig) -> dict:
    failures, checks = [], 0
    rep = embedding_check(min(cfg.max_len, 6), samples=cfg.samples, seed=cfg.seed)
    checks += sum(rep["counts"].values())
    if not rep["pass"]:
        failures.append(rep["witness"])
    if cfg.max_len >= 2:
        for w in ("++", "--"):
            checks += 1
            if ustl_dim(w) != 1:
                failures.append({"word": w, "problem": "USTL space is not one-dimensional"})
        cert = iso_certificate(3)
        checks += 1
        if not cert["pass"]:
            failures.append(cert)
        checks += 1
        if is_minimal_ustl(f_vv("++", Fraction(3)), 3):
            failures.append({"word": "++", "problem": "f_vv stays minimal in USTL"})
    return _result("embedding", checks, failures)


def realization(cfg: SuiteConfig) -> dict:
    failures, checks = [], 0
    rep = realization_verify(min(cfg.max_len, 8))
    checks += len(rep["words"])
    failures += [r for r in rep["words"] if not r["match"]]
    ranked = realization_verify(min(cfg.max_len, 6), gram=True)
    checks += len(ranked["words"])
    failures += [r for r in ranked["words"] if not r["match"]]
    return _result("realization", checks, failures)


def form_symmetry(cfg: SuiteConfig) -> dict:
    rep = form_symmetry_check(min(cfg.max_len, 4), samples=cfg.samples, seed=cfg.seed)
    return _result("form_symmetry", rep["samples"], [rep["witness"]] if not rep["pass"] else [])


SUITES: dict[str, Callable[[SuiteConfig], dict]] = {
    "positivity": positivity,
    "mas_assertion": mas_assertion,
    "form_compatibility": form_compatibility,
    "annular_adjoint": annular_adjoint,
    "jones_wenzl": jones_wenzl_identities,
    "minimality": minimality,
    "embedding": embedding,
    "realization": realization,
    "form_symmetry": form_symmetry,
}


def run_suites(cfg: SuiteConfig, names=None) -> dict:
    results = [SUITES[name](cfg) for name in (names or SUITES)]
    failed = any(r["status"] == "fail" for r in results)
    ran = any(r["status"] == "pass" for r in results)
    return {
        "max_len": cfg.max_len,
        "seed": cfg.seed,
        "delta": "default" if cfg.delta is None else str(cfg.delta),
        "pass": ran and not failed,
        "suites": results,
    }
