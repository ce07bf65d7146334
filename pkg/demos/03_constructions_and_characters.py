"""
Constructions, characters and conditional verdicts
==================================================

Lau products need a character of the second factor. Characters are found
by a rational eigenvalue search, and when some characters are irrational
the point-amenability verdicts are reported as conditional.
"""

from amenability import algebra as alg
from amenability.characters import characters_of
from amenability.cohomology import classify
from amenability.corpus import by_name
from amenability.logic import verdict_str

t2 = by_name("T2")  # upper triangular 2x2 matrices, basis e11, e12, e22
chars = characters_of(t2)
print("characters of T2:", chars.characters, "complete:", chars.complete)

# theta-Lau product with theta = evaluation at e11
n3 = by_name("N3")
lau = alg.lau_product(n3, t2, chars.characters[1])
print("Lau product dim:", lau.dim, "valid:", alg.validate(lau).ok)

# With theta = 0 the Lau product is the direct sum, entry for entry.
print("lau(theta=0) == sum:", alg.lau_product(n3, t2, (0, 0, 0)).table == alg.direct_sum(n3, t2).table)

# Tensor products multiply dimensions and characters.
q2 = by_name("Q2")
print("characters of Q2 (x) Q2:", len(characters_of(alg.tensor(q2, q2))))

# Q(sqrt 2) has two characters, both irrational. None is found over Q, and the
# dimension of B/rad B (= 2) shows the list is incomplete.
r = classify(by_name("Qsqrt2"))
print("Q(sqrt2): characters found", len(r.characters), "complete", r.character_set_complete)
print("  PA:", verdict_str(r.point_amenable), " 0-PA:", verdict_str(r.zero_point_amenable),
      " WA:", verdict_str(r.weakly_amenable))

# Declaring the characters complete in the algebra file lifts the caveat.
declared = by_name("Qsqrt2").with_characters([], complete=True)
print("  with a completeness declaration, PA:", verdict_str(classify(declared, characters_of(declared)).point_amenable))
