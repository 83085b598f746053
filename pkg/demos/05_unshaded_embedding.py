# # Forgetting orientations
#
# Dropping the +/- constraint turns every oriented diagram into an ordinary
# unshaded Temperley-Lieb diagram.  The map is injective and respects all the
# operations, but it changes which projections are minimal.

from fractions import Fraction

from freetl.diagram import compose, enumerate_oriented_tl, identity, star
from freetl.freext import f_vv
from freetl.ustl import embedding_check, forget_orientation, iso_f_plusminus, is_minimal_ustl, ustl_dim
from freetl.word import Word

print("oriented dim of ++:", len(enumerate_oriented_tl(Word.parse("++"))))
print("unshaded dim of ++:", ustl_dim("++"))


# The exhaustive check over all colors up to length 6, plus random chains of
# operations:

report = embedding_check(6, samples=100, seed=1)
print(report["pass"], report["counts"])


# Straight strands from -+ to +- are unitary, so the two alternating
# projections become isomorphic once orientation is forgotten.

u = iso_f_plusminus(3)
print("u* u is the identity:", compose(star(u), u) == identity("-+", Fraction(3), False))
print("u u* is the identity:", compose(u, star(u)) == identity("+-", Fraction(3), False))
print("f_vv(++) minimal after forgetting:", is_minimal_ustl(f_vv("++", Fraction(3)), 3))
print("image of f_vv(+-):", forget_orientation(f_vv("+-").element))
