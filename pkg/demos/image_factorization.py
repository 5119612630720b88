"""
Image factorization of an algebra map
=====================================

The map k x k -> M_2(k), (a, b) -> aI, is split through its image.
The first factor is onto, the second one-to-one.
"""

from semisep.catalog import diagonal_algebra, matrix_algebra, morphism
from semisep.classify import factorization_consistency
from semisep.finvec import FinVec

V = FinVec("Q")
f = morphism(diagonal_algebra(V, 2), matrix_algebra(V, 2), [[1, 0], [0, 0], [0, 0], [1, 0]], name="scalar")

out = factorization_consistency(f)
print("image dimension:", out["image"].carrier)
print("f itself:", out["report"].statuses())
print("onto part naturally full:", out["psi_naturally_full"])
print("one-to-one part separable:", out["phi_separable"])
