"""
Bimodules over a group algebra
==============================

Algebras in the category of Q[Z/2]-bimodules: a diagonal embedding, a
projection and their composite.
"""

from semisep.classify import classify_induction, induction_bimodule_equations, induction_conditions
from semisep.fixtures import group_bimodule_example

ex = group_bimodule_example("Q")
B = ex["backend"]
print("backend:", B.name, " unit is a tensor generator:", B.caps.unit_is_left_tensor_generator)

for key in ("phi", "psi", "composite"):
    rep = classify_induction(ex[key])
    print(f"{key:>10}:", rep.statuses())

# the hand-written splitting of the diagonal lies in the witness space,
# alongside whatever representative the solver picked
phi = ex["phi"]
eqs = induction_bimodule_equations(phi) + [induction_conditions(phi)["separable"]]
print("hand-written E is a witness:", all(l == r for l, r in (eq(ex["E"]) for eq in eqs)))

# over F_2 the group algebra is not separable, so the generator flag is off
ex2 = group_bimodule_example("Fp:2")
print("F_2 generator flag:", ex2["backend"].caps.unit_is_left_tensor_generator)
print("F_2 diagonal:", classify_induction(ex2["phi"]).statuses())
