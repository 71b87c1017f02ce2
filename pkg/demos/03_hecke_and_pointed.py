"""Purely combinatorial verdicts: Hecke blocks via l-cores, and pointed Hopf data.

Run:  python demos/03_hecke_and_pointed.py
"""

from repwild.combinatorics import (PointedDatum, ell_core, hecke_blocks_typeA, pointed_datum_check,
                                   principal_block_BD_verdict, quantum_datum)

# Removing 2-hooks from (6) leaves nothing, so (6) lies in the block with empty core.
print("2-core of (6):", ell_core((6,), 2), " 3-core of (4,3,1):", ell_core((4, 3, 1), 3))
print(hecke_blocks_typeA(6, 2))
print(hecke_blocks_typeA(4, 5))

for r in (5, 7, 9):
    print(principal_block_BD_verdict(r, 3))

# Type A2 at a fifth root of unity: the only common solution is zero, so the datum is wild.
print("A2, l=5:", pointed_datum_check(quantum_datum([[2, -1], [-1, 2]], 5)))
# chi_2 = chi_1^{-1}: the vector (1, 1) solves every equation and the criterion does not apply.
print("engineered:", pointed_datum_check(PointedDatum([5], [(1,), (1,)], [(1,), (4,)], [[2, 0], [0, 2]])))
