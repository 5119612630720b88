"""
Induction along a map of finite monoids
=======================================

Reduction mod 3 from the multiplicative monoid Z/6 to Z/3, classified
by searching the finite witness space.
"""

from semisep.classify import classify_induction, induced_idempotent
from semisep.finset import FINSET
from semisep.fixtures import set_mod_example
from semisep.modalg import regular_module

ex = set_mod_example()
phi = ex["phi"]
print("phi:", FINSET.describe(phi.map))

# every verdict is backed by a witness or by an exhausted search
rep = classify_induction(phi)
for prop, status in rep.statuses().items():
    print(f"{prop:>16}: {status}")
print("witness space size:", rep.witness_space_dimension)

E = rep.semiseparable.witness
print("first witness:", FINSET.describe(E))

# the witness induces an idempotent on each induced module
d = induced_idempotent(phi, E, regular_module(phi.src, "right"))
print("idempotent:", d["idempotent"], " identity after induction:", d["induced_identity"])
