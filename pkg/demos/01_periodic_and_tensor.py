"""Periodic resolutions over k[X]/(X^l) and how complexity adds under tensor products.

Run:  python demos/01_periodic_and_tensor.py
"""

from repwild import zoo
from repwild.fields import GF
from repwild.growth import complexity
from repwild.modrep import trivial_module
from repwild.resolution import minimal_resolution

# A truncated polynomial ring has a 2-periodic resolution of k with every term free of rank one.
for ell in (2, 3, 5):
    A = zoo.truncated_poly(ell)
    res = minimal_resolution(trivial_module(A), 10)
    print(f"{A.name}: dim P_n = {res.dims[:8]}")

# (Z/2)^r in characteristic 2 is the r-fold tensor power of k[X]/(X^2).
# The term dims grow like n^(r-1), so the complexity of k is r.
for r in (1, 2, 3):
    A = zoo.elementary_abelian_group_algebra(2, r, GF(2))
    rep = complexity(A, trivial_module(A), 14)
    print(f"{A.name}: dims {rep.sequence[:7]} ... -> {rep}")
