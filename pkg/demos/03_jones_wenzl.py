# # Jones-Wenzl idempotents
#
# The idempotents are built by Wenzl's recursion over Q(delta).  Each one is
# a combination of all pairings on 2n points, is killed by every cup-cap,
# and closes up to the quantum integer [n+1].

from freetl.coeff import quantum_int
from freetl.diagram import Side, compose, cup_cap, trace_close
from freetl.freext import jones_wenzl

f2 = jones_wenzl(2, 1)
for d, c in f2.element.terms.items():
    print(f"{str(c):>8}  {list(d.arcs)}")


# The defining identities, checked exactly for n up to 5:

for n in range(1, 6):
    p = jones_wenzl(n, 1)
    f = p.element
    killed = all(compose(cup_cap(p.word, i), f).is_zero() for i in range(n - 1))
    tr = trace_close(f, Side.LEFT)
    print(f"n={n} terms={len(f.terms):>3} idempotent={p.is_idempotent()} killed={killed} trace={tr}")
    assert tr == trace_close(f, Side.RIGHT)


# The traces are the quantum integers:

print([str(quantum_int(k)) for k in range(1, 7)])
