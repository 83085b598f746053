# # Gram matrices of the diagram form
#
# The basis of a space is its set of non-crossing pairings that join + to -.
# Pairing two diagrams against each other produces closed loops, and each
# loop is worth delta.  The resulting Gram matrix is exact: symbolic in delta
# or evaluated at a rational value.

from fractions import Fraction

from freetl.coeff import DeltaMode
from freetl.gram import gram_matrix
from freetl.word import balanced_words

report = gram_matrix("+-+-")
print(report.to_text())


# At a fixed rational delta the report also carries a positive-definiteness
# verdict from the leading principal minors.

for d in (2, Fraction(5, 2), 3):
    r = gram_matrix("+-+-+-", mode=DeltaMode.fixed(d))
    print(f"delta={d}: det={r.determinant}, minors={[str(m) for m in r.minors]}, PD={r.positive_definite}")


# Every balanced word up to length 6 gives a definite form at delta = 2.

verdicts = {str(w): gram_matrix(w, mode=DeltaMode.fixed(2)).positive_definite for w in balanced_words(6)}
print(sum(verdicts.values()), "of", len(verdicts), "positive definite")


# Below 2 things can degenerate: at delta = 1 the alternating six-point
# form loses rank, and the report exposes the kernel.

r = gram_matrix("+-+-+-", mode=DeltaMode.fixed(1))
print("rank", r.rank, "of", r.basis_size, "kernel", [[str(x) for x in v] for v in r.nullspace_basis])
