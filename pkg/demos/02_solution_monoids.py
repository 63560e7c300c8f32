"""Solution monoids of equations and congruences over N0*.

A system is a pair of matrices F, G (read: F·t = G·t) plus congruence
rows D·t ∈ m·N0*.  The solutions inside (N0*)^s form a monoid: they
are closed under addition and under scaling by inf, and infinite
coordinates satisfy every congruence for free.
"""

from supportmonoids import DioSystem, INF, enumerate_truncated, is_member, lift_congruences

# x0 + y1 = x0 + y2: the decomposition monoid of R ⊕ (integral closure)
# for a one-dimensional local domain whose conductor square has two
# residue fields on top
cusp = DioSystem(s=3, F=((1, 1, 0),), G=((1, 0, 1),))

print("-- membership ----------------------------------------------")
for x in ((INF, 1, 0), (0, 1, 0), (2, 5, 5), (INF, INF, INF)):
    print(f"{x!r:>20}  member: {is_member(cusp, x)}")

print()
print("-- all solutions with coordinates in {0, 1, inf} ------------")
for x in enumerate_truncated(cusp, 1):
    print("  ", x)

print()
print("-- congruences ----------------------------------------------")
parity = DioSystem(s=2, D=((1, 1),), moduli=(2,))
print("x + y even:", [x for x in enumerate_truncated(parity, 2) if INF not in x])
print("(inf, 1) member:", is_member(parity, (INF, 1)), " (inf is a multiple of 2)")

print()
print("-- trading congruences for equations ------------------------")
print("before:", parity.to_json())
print("after: ", lift_congruences(parity).to_json())
