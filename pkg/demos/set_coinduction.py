"""
Coinduction between finite sets
===============================

Every finite set is a coalgebra under the diagonal.  For a map of such
coalgebras the verdicts follow surjectivity and bijectivity.
"""

import itertools

from semisep.classify import classify_coinduction
from semisep.comodcoalg import CoalgebraMorphism
from semisep.finset import FINSET, FinSetObject
from semisep.fixtures import set_coalgebra

X, Y = set_coalgebra(FinSetObject.of_size(3)), set_coalgebra(FinSetObject.of_size(2))

for table in itertools.islice(itertools.product(range(2), repeat=3), 0, 8, 3):
    psi = CoalgebraMorphism(X, Y, FINSET.mor(X.carrier, Y.carrier, list(table)))
    print(table, classify_coinduction(psi).statuses())
