# Working with Corran-Picantin monoids: words, lcms and the Garside element.
from braidhom.garside import Monoid
from braidhom.presentations import corran_picantin, serialize

p = corran_picantin(3, 3)
print(serialize(p))

M = Monoid(p)
print("engine:", M.method)

# Two spellings of the same element have the same canonical form
u = M.element("t1 t0 s3")
v = M.element("t0 t2 s3")
print(M.fmt(u), "==", M.fmt(v), "->", M.equal(u, v))

# Left lcm of two atoms, with the complements that realise it
res = M.lcm([M.atom("t0"), M.atom("s3")])
print("lcm(t0, s3) =", M.fmt(res.lcm))
for x, c in res.complements.items():
    print("   ", M.fmt(c), "*", M.fmt(x))

# Garside element and its divisors (the simples)
delta = M.delta()
simples = M.divisors(delta)
print("Delta =", M.fmt(delta), "with", len(simples), "divisors")

# A breadth-first search over word classes gives the same answers, only slower
B = Monoid(p, method="bfs")
print("bfs agrees on Delta:", B.delta() == delta)
