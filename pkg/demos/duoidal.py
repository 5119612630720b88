"""
Two duoidal structures on vector spaces
=======================================

Tensor with tensor, and tensor with direct sum.  Induction functors
combine along the second product.
"""

from semisep.catalog import matrix_algebra
from semisep.duoidal import additive, check_duoidal_propositions, prebraided
from semisep.finvec import FinVec
from semisep.modalg import unit_morphism

V = FinVec("Q")
u = unit_morphism(matrix_algebra(V, 2))

for D in (prebraided(), additive()):
    print(D.name, "coherence failures:", D.check_coherence())
    for r in check_duoidal_propositions(D, algebra_morphisms=[(u, u)]):
        print("   ", r["property"], "holds:", r["holds"], "witness valid:", r["witness_valid"])

# a sign error in the interchange map is caught, with the smallest failing dimensions
print(additive(zeta_sign=-1).check_coherence())
