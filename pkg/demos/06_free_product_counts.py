# # Counting in the free product
#
# Simple objects of a free product are alternating words in the simples of
# the two factors.  Realizing an oriented diagram inside the free product
# needs a non-crossing pairing of the group points g+ / g- around it, and
# counting the diagrams that admit one reproduces the oriented dimension.

from freetl.diagram import enumerate_oriented_tl
from freetl.freeprod import compatible_diagrams, realization_instance, realization_verify, sigma0_enumerate

print([str(w) for w in sigma0_enumerate({"a"}, {"b"}, 3)])
print([sum(1 for w in sigma0_enumerate(range(2), range(3), 4) if len(w) == k) for k in range(5)])


# The layout of group points for a word, and the diagrams that survive:

inst = realization_instance("+--+")
print(" ".join(f"g{'+' if v > 0 else '-'}" if k == "g" else f"x{v}" for k, v in inst.points))
print(len(compatible_diagrams("+--+")), "of", len(enumerate_oriented_tl(inst.word)))


# The full comparison up to length 8:

report = realization_verify(8)
print("all match:", report["pass"], "over", len(report["words"]), "words")
for row in report["words"][:6]:
    print(row)
