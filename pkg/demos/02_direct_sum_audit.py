"""
Auditing the direct-sum theorem
===============================

The harness turns each hereditary statement into hypothesis -> conclusion
clauses and hunts for violations. Here the cyclic-amenability part of the
direct-sum statement fails on the smallest possible input.
"""

import json
import tempfile
from pathlib import Path

from amenability import harness as h
from amenability.cohomology import classify
from amenability.corpus import by_name
from amenability.fileformat import dumps

z1 = by_name("Z1")
z2 = by_name("Z2")

# Z1 has one derivation and it is symmetric, so there are no nonzero cyclic
# derivations: cyclically amenable. Z1 (+) Z1 is the 2-dim zero algebra, where
# every linear map is a derivation, including the antisymmetric cross-block one.
print("Z1 CA:", classify(z1).cyclically_amenable)
print("Z2 CA:", classify(z2).cyclically_amenable, "(cyclic dim", classify(z2).cyclic_dim, ")")

inst = h.LauInstance(z1, z1, (0,), "sum(Z1, Z1)")
outcome = h.run_check("T3.6", [inst])
print("T3.6 status:", outcome.status, outcome.clauses)

# The witness is self-contained: it carries both summands and the clause.
witness = outcome.counterexamples[0]
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "witness.json"
    path.write_text(dumps(witness))
    print("witness re-verifies after reload:", h.reverify(h.load_witness(path)))
print(json.dumps(witness["check"], indent=2))

# The same run over a small random sample: the other clauses keep passing.
summary = h.check_all(seed=1, trials=20, max_dim=8, ids=["T3.6", "DECOMP", "T3.1"])
print(summary.text())
