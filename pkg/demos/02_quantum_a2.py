"""The positive part of a small quantum group of type A2 at a cube root of unity.

It is 27-dimensional and Frobenius, and its cohomology is finitely generated.
The trivial module has complexity 3, so its one block is wild.  In rank one the same
construction gives back k[X]/(X^3), and there the criterion says nothing.

Run:  python demos/02_quantum_a2.py      (about half a minute)
"""

from repwild import algebra as alg
from repwild import zoo
from repwild.modrep import trivial_module
from repwild.report import wildness_report

A = zoo.quantum_nilpotent("A2", 3)
print(A, "valid:", alg.validate(A).ok, "self-injective:", bool(alg.is_self_injective(A)))

v = wildness_report(A, trivial_module(A), window=12, consistency=False)
print(v)
print("resolution dims:", v.cx.sequence)
print("fg:", v.fg.citation)

B = zoo.quantum_nilpotent("A1", 3)
w = wildness_report(B, trivial_module(B), window=12)
print(w)
for note in w.notes:
    print("  note:", note)
