"""From completion-side rank data to decomposition monoids.

Over a one-dimensional local domain with reduced completion, a direct
sum of completion indecomposables descends to the base ring exactly
when its weighted rank is the same at every minimal prime.  Feeding the
rank matrix in therefore cuts out the whole decomposition monoid as a
system of equations.
"""

from supportmonoids import (INF, RankMatrix, b_max, enumerate_truncated,
                            extract, from_integer_matrix, generators,
                            hilbert_basis, is_extended, realize_wiegand,
                            truncated_members, vstar_system)

print("-- two indecomposables over two primes -----------------------")
rm = RankMatrix(a=((1, 1, 0), (1, 0, 1)), labels=("R", "P", "Q"))
sys_ = vstar_system(rm)
print("descent equations:", sys_.to_json())
for x in ((INF, 1, 0), (0, 1, 0), (2, 3, 3)):
    print(f"  multiplicities {x!r:>15} descend: {is_extended(rm, x)}")

print()
print("-- realizing the largest monoid over a kernel ----------------")
E = ((1, -1),)
rm2, sys2 = realize_wiegand(E)
print("ranks:", rm2.a)
print("system:", sys2.to_json())
A = hilbert_basis(from_integer_matrix(E))
print("finite part generated by:", A.gens)
same = frozenset(enumerate_truncated(sys2, 3)) == truncated_members(b_max(A), 3)
print("solution set == largest monoid over that finite part:", same)
print("generators:", generators(extract(sys2)))
print()
print("every multiplicity vector with an infinite entry descends here, so")
print("this base ring has the largest possible supply of pure-projectives")
print("that are not direct sums of finitely generated modules.")
