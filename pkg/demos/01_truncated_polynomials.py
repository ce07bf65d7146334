"""
Classifying Q[x]/(x^2)
======================

A two-dimensional algebra with a nilpotent direction: the smallest place
where derivations into the dual exist but none of them is inner.
"""

from amenability import algebra as alg
from amenability import cohomology as co
from amenability.corpus import by_name

# Q[x]/(x^2) is the unitization of the one-dimensional zero algebra.
# The basis is (x, 1): the adjoined unit comes last.
a = alg.unitize(by_name("Z1"))
print("table equals corpus Qx2:", a.table == by_name("Qx2").table)
print("unit:", a.unit)

# Derivations D: A -> A* live in the 4-dim space of 2x2 matrices M[i][j] = <D(e_i), e_j>.
der = co.derivation_space(a)
inn = co.inner_space(a)
cyc = co.cyclic_derivation_space(a)
print("dim Der, Inn, Cyc:", der.dim, inn.dim, cyc.dim)
print("the derivation:", der.basis[0])

# A commutative algebra has no nonzero inner derivations, so Der != Inn:
# not weakly amenable. The single derivation (<D(x), 1> = 1) is not
# antisymmetric, so it is not cyclic: CWA fails while CA holds vacuously.
r = co.classify(a)
for name, value in zip(("WA", "CA", "CWA", "PA", "0-PA"), r.verdicts):
    print(f"{name:>5}: {value}")

# The only character is evaluation at x = 0, and it carries a point derivation.
print("characters:", r.characters, "point-derivation dims:", r.point_derivation_dims)

# The quasi-additive functionals are computed by a separate solver; the
# dimensions must line up with the derivation side.
print("quasi-additive dims:", r.quasi_additive_dim, r.inner_qa_dim, r.cyclic_qa_dim,
      "consistent:", r.qa_consistent)
