# # Block projections and simple objects
#
# For a word v, placing a Jones-Wenzl idempotent on each alternating block
# gives a projection f_vv.  It is minimal when p End(v) p is one-dimensional,
# which we test by an exact rank computation at delta = 3.

from fractions import Fraction

from freetl.diagram import identity
from freetl.freext import Projection, compressed_rank, f_vv, is_minimal, simple_objects
from freetl.word import Word, all_words

d = Fraction(3)
for v in ["+", "+-", "++", "+-+", "+--", "-++"]:
    p = f_vv(v, d)
    print(f"{v:>4}: terms={len(p.element.terms)} minimal={is_minimal(p, d)}")


# The identity on +-+- is not minimal: its endomorphism algebra has two
# independent elements.

print("identity on +-+- minimal:", is_minimal(Projection(Word.parse("+-+-"), identity("+-+-", d)), d))


# Different words give non-isomorphic simples: the compressed hom between
# their projections vanishes.

words = [w for n in range(1, 3) for w in all_words(n)]
for u in words:
    row = [compressed_rank(f_vv(u, d).element, f_vv(v, d).element, d) for v in words]
    print(f"{str(u):>3}", row)

print("simples up to length 2:", [str(w) or "()" for w in simple_objects(2)])
