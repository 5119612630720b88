"""
Transport along monoidal functors
=================================

Linearization sends a finite monoid to its monoid algebra.  Verdicts
carry over, and the comparison map between the two induced modules is
invertible.
"""

from semisep.classify import classify_induction
from semisep.finvec import FinVec
from semisep.fixtures import group_like_coalgebra, set_mod_example
from semisep.modalg import regular_module
from semisep.transport import (check_counit_preservation, check_preservation, linearization, matn_inclusion,
                               phi_comparison)

L = linearization("Q")
phi = set_mod_example()["phi"]
out = check_preservation(L, phi, classify_induction(phi))
for prop, entry in out["properties"].items():
    print(f"{prop:>16}: set {entry['source']}, linear {entry['target']}")

r = phi_comparison(L, phi, regular_module(phi.src, "right"))
print("comparison map invertible:", r["iso"])

# the inclusion into 2x2 matrix-graded spaces is only colax; its counit is not onto
M = check_counit_preservation(matn_inclusion(2), group_like_coalgebra(FinVec("Q"), 1))
for prop, entry in M["properties"].items():
    print(f"{prop:>16}: hypothesis {entry['hypothesis']} met: {entry['hypothesis_met']}, image {entry['target']}")
