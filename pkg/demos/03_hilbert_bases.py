"""Hilbert bases: the finite part of a solution monoid has a unique
minimal generating set, found by a Contejean-Devie completion search.
"""

from supportmonoids import (INF, DioSystem, find_order_unit, hilbert_basis,
                            in_generated)

examples = {
    "y1 = y2 (3 coords)": DioSystem(s=3, F=((1, 1, 0),), G=((1, 0, 1),)),
    "2x = 3y": DioSystem(s=2, F=((2, 0),), G=((0, 3),)),
    "x + y even": DioSystem(s=2, D=((1, 1),), moduli=(2,)),
    "free plane": DioSystem(s=2),
}

for name, sys_ in examples.items():
    basis = hilbert_basis(sys_)
    unit = find_order_unit(sys_)
    print(f"{name:22} basis: {basis.gens}  order-unit: {unit}")

print()
print("-- membership in a generated monoid (inf coefficients allowed) --")
gens = ((1, 0, 0), (0, 1, 1), (INF, 1, 0), (INF, 0, 1))
for target in ((INF, 2, 1), (0, 1, 0), (INF, INF, INF)):
    print(f"{target!r:>22} in <gens>: {in_generated(gens, target)}")
