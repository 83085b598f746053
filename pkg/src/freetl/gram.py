"""Gram matrices of the diagram inner product and what can be read off them."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Sequence

from .coeff import DeltaMode, RationalFunction, eval_at, scalar_from_json, scalar_to_json
from .diagram import Morphism, PairingDiagram, inner_product, vector
from .freext import spanning_set
from .linalg import determinant, is_positive_definite, leading_principal_minors, nullspace, rank
from .word import Word

__all__ = ["GramReport", "gram_matrix", "quotient_dim"]


@dataclass
class GramReport:
    word: Word
    basis_size: int
    matrix: list[list]
    rank: int
    determinant: object
    nullspace_basis: list[tuple]
    positive_definite: bool | None = None
    mode: DeltaMode = field(default_factory=DeltaMode.symbolic)
    minors: list | None = None

    def to_json(self) -> dict:
        out = {
            "word": str(self.word),
            "delta": str(self.mode),
            "basis_size": self.basis_size,
            "matrix": [[scalar_to_json(x) for x in row] for row in self.matrix],
            "rank": self.rank,
            "determinant": scalar_to_json(self.determinant),
            "nullspace_basis": [[scalar_to_json(x) for x in v] for v in self.nullspace_basis],
        }
        if self.positive_definite is not None:
            out["positive_definite"] = self.positive_definite
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "GramReport":
        mode = DeltaMode.parse(obj["delta"])
        sym = mode.is_symbolic

        def scalar(x):
            return scalar_from_json(x, sym)

        return cls(
            Word.parse(obj["word"]),
            obj["basis_size"],
            [[scalar(x) for x in row] for row in obj["matrix"]],
            obj["rank"],
            scalar(obj["determinant"]),
            [tuple(scalar(x) for x in v) for v in obj["nullspace_basis"]],
            obj.get("positive_definite"),
            mode,
        )

    def to_csv(self) -> str:
        if self.mode.is_symbolic:
            raise ValueError("CSV export is only available for a fixed rational delta")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self.matrix:
            writer.writerow([str(x) for x in row])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"word {self.word or '()'}  delta={self.mode}  basis={self.basis_size}  rank={self.rank}"]
        for row in self.matrix:
            lines.append("  [" + ", ".join(str(x) for x in row) + "]")
        lines.append(f"det = {self.determinant}")
        if self.positive_definite is not None:
            lines.append(f"positive definite: {self.positive_definite}")
        return "\n".join(lines)


def _as_vector(b, delta) -> Morphism:
    if isinstance(b, PairingDiagram):
        return vector(b, 1, delta)
    if isinstance(b, Morphism):
        if b.delta == delta:
            return b.as_vector()
        if isinstance(b.delta, RationalFunction) and not isinstance(delta, RationalFunction):
            return b.evaluate(delta).as_vector()
        raise ValueError(f"basis element has loop value {b.delta}, report uses {delta}")
    raise TypeError(f"cannot use {type(b).__name__} as a basis element")


def gram_matrix(w, basis: Sequence | None = None, mode: DeltaMode | None = None) -> GramReport:
    """Gram matrix of ``basis`` (default: the oriented TL basis of ``w``).

    With a fixed rational delta the report includes a positive-definiteness
    verdict from Sylvester's criterion.
    """
    w = Word.coerce(w)
    mode = mode or DeltaMode.symbolic()
    if basis is None:
        basis = spanning_set(w)
    delta = mode.delta
    vecs = [_as_vector(b, delta) for b in basis]
    for v in vecs:
        if v.color != w:
            raise ValueError(f"basis element of color {v.color} in a Gram matrix for {w}")
    n = len(vecs)
    mat = [[inner_product(vecs[i], vecs[j]) for j in range(n)] for i in range(n)]
    return _report(w, mat, mode)


def _report(w: Word, mat: list[list], mode: DeltaMode) -> GramReport:
    n = len(mat)
    r = rank(mat) if n else 0
    det = determinant(mat)
    ker = nullspace(mat, n) if r < n else []
    pd = minors = None
    if not mode.is_symbolic:
        minors = leading_principal_minors(mat)
        pd = is_positive_definite(mat)
    return GramReport(w, n, mat, r, det, ker, pd, mode, minors)


def quotient_dim(w, mode: DeltaMode | None = None) -> int:
    """Dimension of the quotient by the null space of the form: the Gram rank."""
    return gram_matrix(w, None, mode).rank


def evaluate_report(report: GramReport, d) -> GramReport:
    """Specialize a symbolic report at ``d`` (recomputing rank and minors exactly)."""
    mat = [[eval_at(x, d) for x in row] for row in report.matrix]
    return _report(report.word, mat, DeltaMode.fixed(d))
