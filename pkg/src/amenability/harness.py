"""Executable audit of the hereditary theorems on concrete algebras.

Each registry entry turns a theorem into clauses ``hypothesis -> conclusion``
over amenability reports and morphism checks. Instances come from the
corpus and from seeded random recipes. An instance whose hypothesis fails
is counted as vacuous; one whose verdicts depend on an incomplete character
list is inconclusive; a violated clause is a counterexample and is written
out as a self-contained witness that can be reloaded and re-checked.

In finite dimension every linear map is continuous, every subspace is
closed, dense range means onto and weak compactness is automatic; each
entry's ``finite_dim_note`` records which of these it relied on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from . import algebra as alg
from . import exactla as la
from .algebra import Algebra, Morphism
from .characters import CharacterSet, characters_of
from .cohomology import AmenabilityReport, classify
from .corpus import corpus
from .fileformat import algebra_from_dict, algebra_to_dict, dumps, load_json
from .logic import Tri, all_equal3, and3, iff3, verdict_str

ZERO, ONE = Fraction(0), Fraction(1)


class UnknownCheck(KeyError):
    pass


# ---------------------------------------------------------------------------
# instances


@dataclass(frozen=True)
class AlgebraInstance:
    algebra: Algebra
    provenance: str = field(default="", compare=False)
    shape = "algebra"


@dataclass(frozen=True)
class LauInstance:
    left: Algebra
    right: Algebra
    theta: tuple
    provenance: str = field(default="", compare=False)
    shape = "lau"

    @cached_property
    def product(self) -> Algebra:
        return alg.lau_product(self.left, self.right, self.theta)

    @property
    def theta_zero(self) -> bool:
        return not any(self.theta)

    @property
    def is_unitization(self) -> bool:
        return self.right == alg.scalars() and self.theta == (ONE,)


@dataclass(frozen=True)
class TensorInstance:
    left: Algebra
    right: Algebra
    provenance: str = field(default="", compare=False)
    shape = "tensor"

    @cached_property
    def product(self) -> Algebra:
        return alg.tensor(self.left, self.right)


@dataclass(frozen=True)
class MorphismInstance:
    phi: Morphism
    psi: Optional[Morphism] = None
    kind: str = "morphism"
    provenance: str = field(default="", compare=False)
    shape = "morphism"


Instance = AlgebraInstance | LauInstance | TensorInstance | MorphismInstance


def _morphism_to_dict(m: Morphism) -> dict:
    return {
        "source": algebra_to_dict(m.source),
        "target": algebra_to_dict(m.target),
        "matrix": [[la.format_rational(x) for x in row] for row in m.matrix],
    }


def _morphism_from_dict(d: dict) -> Morphism:
    src, tgt = algebra_from_dict(d["source"]), algebra_from_dict(d["target"])
    return Morphism(src, tgt, [[la.parse_rational(x) for x in row] for row in d["matrix"]])


def instance_to_dict(inst: Instance) -> dict:
    d: dict = {"shape": inst.shape, "provenance": inst.provenance}
    if isinstance(inst, AlgebraInstance):
        d["algebra"] = algebra_to_dict(inst.algebra)
    elif isinstance(inst, LauInstance):
        d["left"] = algebra_to_dict(inst.left)
        d["right"] = algebra_to_dict(inst.right)
        d["theta"] = [la.format_rational(x) for x in inst.theta]
    elif isinstance(inst, TensorInstance):
        d["left"] = algebra_to_dict(inst.left)
        d["right"] = algebra_to_dict(inst.right)
    else:
        d["kind"] = inst.kind
        d["phi"] = _morphism_to_dict(inst.phi)
        d["psi"] = _morphism_to_dict(inst.psi) if inst.psi is not None else None
    return d


def instance_from_dict(d: dict) -> Instance:
    shape, prov = d["shape"], d.get("provenance", "")
    if shape == "algebra":
        return AlgebraInstance(algebra_from_dict(d["algebra"]), prov)
    if shape == "lau":
        return LauInstance(algebra_from_dict(d["left"]), algebra_from_dict(d["right"]),
                           tuple(la.parse_rational(x) for x in d["theta"]), prov)
    if shape == "tensor":
        return TensorInstance(algebra_from_dict(d["left"]), algebra_from_dict(d["right"]), prov)
    if shape == "morphism":
        psi = _morphism_from_dict(d["psi"]) if d.get("psi") is not None else None
        return MorphismInstance(_morphism_from_dict(d["phi"]), psi, d["kind"], prov)
    raise ValueError(f"unknown instance shape {shape!r}")


# ---------------------------------------------------------------------------
# evaluation context


class Context:
    """Memoises reports and characters by algebra structure."""

    def __init__(self):
        self._reports: dict[Algebra, AmenabilityReport] = {}
        self._chars: dict[Algebra, CharacterSet] = {}
        self._homs: dict[Morphism, bool] = {}

    def chars(self, a: Algebra) -> CharacterSet:
        if a not in self._chars:
            self._chars[a] = characters_of(a)
        return self._chars[a]

    def report(self, a: Algebra) -> AmenabilityReport:
        if a not in self._reports:
            self._reports[a] = classify(a, self.chars(a))
        return self._reports[a]

    def hom(self, m: Morphism) -> bool:
        if m not in self._homs:
            self._homs[m] = alg.check_homomorphism(m)
        return self._homs[m]

    def surjective_hom(self, m: Morphism) -> bool:
        return self.hom(m) and alg.is_surjective(m)

    def retraction(self, phi: Morphism, psi: Morphism) -> bool:
        return (self.hom(phi) and self.hom(psi)
                and alg.compose(phi, psi).matrix == la.identity(phi.target.dim))

    # verdict shorthands
    def wa(self, a): return self.report(a).weakly_amenable
    def ca(self, a): return self.report(a).cyclically_amenable
    def cwa(self, a): return self.report(a).cyclically_weakly_amenable
    def pa(self, a): return self.report(a).point_amenable
    def zpa(self, a): return self.report(a).zero_point_amenable
    def delta(self, a): return self.chars(a).nonempty


# ---------------------------------------------------------------------------
# checks


@dataclass(frozen=True)
class Clause:
    label: str
    hypothesis: Tri
    conclusion: Tri

    @property
    def status(self) -> str:
        if self.hypothesis is False:
            return "vacuous"
        if self.hypothesis is None:
            return "inconclusive"
        if self.conclusion is None:
            return "inconclusive"
        return "pass" if self.conclusion else "violated"


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    shape: str
    statement: str
    finite_dim_note: str
    evaluate: Callable[[Instance, Context], list]

    def negated(self) -> "TheoremCheck":
        """The same check with every conclusion inverted (falsification self-test)."""
        def evaluate(inst, ctx):
            return [Clause(c.label, c.hypothesis, None if c.conclusion is None else not c.conclusion)
                    for c in self.evaluate(inst, ctx)]
        return TheoremCheck(self.id, self.shape, "NOT " + self.statement, self.finite_dim_note, evaluate)


REGISTRY: dict[str, TheoremCheck] = {}

_CONT = "continuity automatic in finite dimension"
_DENSE = "dense range read as surjective"


def register(id: str, shape: str, statement: str, note: str):
    def deco(fn):
        REGISTRY[id] = TheoremCheck(id, shape, statement, note, fn)
        return fn
    return deco


@register("T2.1.i", "morphism", "surjective homomorphisms preserve cyclically weak amenability",
          f"{_DENSE}; {_CONT}")
def _t21_i(inst, ctx):
    a1, a2 = inst.phi.source, inst.phi.target
    return [Clause("(i)", and3(ctx.surjective_hom(inst.phi), ctx.cwa(a1)), ctx.cwa(a2))]


_DUAL = ("A2* o phi = A1* means every functional on the source factors through phi, "
         "i.e. phi is injective; with surjectivity phi is bijective, so the check is weak")


@register("T2.1.ii", "morphism",
          "surjective homomorphisms with A2* o phi = A1* preserve cyclic amenability",
          f"{_DENSE}; {_DUAL}")
def _t21_ii(inst, ctx):
    phi = inst.phi
    hyp = and3(ctx.surjective_hom(phi), alg.dual_composition_full(phi), ctx.ca(phi.source))
    return [Clause("(ii)", hyp, ctx.ca(phi.target))]


@register("T2.1.iii", "morphism",
          "surjective homomorphisms with A2* o phi = A1* preserve weak amenability",
          f"{_DENSE}; {_DUAL}")
def _t21_iii(inst, ctx):
    phi = inst.phi
    hyp = and3(ctx.surjective_hom(phi), alg.dual_composition_full(phi), ctx.wa(phi.source))
    return [Clause("(iii)", hyp, ctx.wa(phi.target))]


@register("T2.1.iv", "morphism", "surjective homomorphisms preserve 0-point amenability",
          f"{_DENSE}; {_CONT}")
def _t21_iv(inst, ctx):
    a1, a2 = inst.phi.source, inst.phi.target
    return [Clause("(iv)", and3(ctx.surjective_hom(inst.phi), ctx.zpa(a1)), ctx.zpa(a2))]


@register("C2.2", "morphism", "quotients inherit cyclically weak amenability and point amenability",
          "closed ideal read as ideal subspace; quotient map is the surjection")
def _c22(inst, ctx):
    if inst.kind != "quotient":
        return []
    a, q = inst.phi.source, inst.phi.target
    return [
        Clause("(i)", ctx.cwa(a), ctx.cwa(q)),
        Clause("(ii)", ctx.pa(a), ctx.pa(q)),
    ]


@register("T2.4", "morphism", "retractions preserve cyclic amenability and weak amenability",
          _CONT)
def _t24(inst, ctx):
    if inst.psi is None:
        return []
    phi = inst.phi
    retr = ctx.retraction(phi, inst.psi)
    return [
        Clause("(i)", and3(retr, ctx.ca(phi.source)), ctx.ca(phi.target)),
        Clause("(ii)", and3(retr, ctx.wa(phi.source)), ctx.wa(phi.target)),
    ]


def _lau_part(inst: LauInstance) -> str:
    if inst.is_unitization:
        return "(iii)"
    return "(ii)" if inst.theta_zero else "(i)"


@register("T3.1", "lau", "the Lau product is 0-point amenable iff both factors are",
          f"{_CONT}; direct sum is theta = 0, unitization is Q with the identity character")
def _t31(inst, ctx):
    p = inst.product
    return [Clause(_lau_part(inst), True,
                   iff3(ctx.zpa(p), and3(ctx.zpa(inst.left), ctx.zpa(inst.right))))]


@register("C3.2", "lau",
          "for theta a character and nonempty character spaces, the Lau product is "
          "cyclically weakly amenable iff both factors are; likewise A vs its unitization",
          _CONT)
def _c32(inst, ctx):
    if inst.theta_zero:
        return []
    a1, a2, p = inst.left, inst.right, inst.product
    out = [Clause("(i)", and3(ctx.delta(a1), ctx.delta(a2)),
                  iff3(ctx.cwa(p), and3(ctx.cwa(a1), ctx.cwa(a2))))]
    if inst.is_unitization:
        out.append(Clause("(ii)", ctx.delta(a1), iff3(ctx.cwa(a1), ctx.cwa(p))))
    return out


@register("T3.3", "lau",
          "point amenability of the Lau product passes to both factors; "
          "the converse holds for essential factors", "essential means A^2 = A (no closure needed)")
def _t33(inst, ctx):
    a1, a2, p = inst.left, inst.right, inst.product
    r1, r2 = ctx.report(a1), ctx.report(a2)
    part = _lau_part(inst)
    return [
        Clause(part + " forward", ctx.pa(p), and3(ctx.pa(a1), ctx.pa(a2))),
        Clause(part + " converse", and3(r1.essential, r2.essential, ctx.pa(a1), ctx.pa(a2)), ctx.pa(p)),
    ]


@register("T3.4", "lau",
          "for theta a character, cyclic amenability of the Lau product passes to the second "
          "factor; A is cyclically amenable iff its unitization is", _CONT)
def _t34(inst, ctx):
    if inst.theta_zero:
        return []
    a1, a2, p = inst.left, inst.right, inst.product
    out = [Clause("(i)", ctx.ca(p), ctx.ca(a2))]
    if inst.is_unitization:
        out.append(Clause("(ii)", True, iff3(ctx.ca(a1), ctx.ca(p))))
    return out


@register("T3.5", "lau",
          "for theta a character: weak amenability of the Lau product passes to both factors; "
          "weakly amenable factors with characters give a cyclically weakly amenable product; "
          "for commutative factors with characters, weak amenability is equivalent", _CONT)
def _t35(inst, ctx):
    if inst.theta_zero:
        return []
    a1, a2, p = inst.left, inst.right, inst.product
    r1, r2 = ctx.report(a1), ctx.report(a2)
    both_delta = and3(ctx.delta(a1), ctx.delta(a2))
    return [
        Clause("(i)", ctx.wa(p), and3(ctx.wa(a1), ctx.wa(a2))),
        Clause("(ii)", and3(ctx.wa(a1), ctx.wa(a2), both_delta), ctx.cwa(p)),
        Clause("(iii)", and3(r1.commutative, r2.commutative, both_delta),
               iff3(ctx.wa(p), and3(ctx.wa(a1), ctx.wa(a2)))),
    ]


@register("C3.7", "lau",
          "A weakly amenable implies A# weakly amenable, with the converse when Delta(A) is "
          "nonempty or A is semisimple", "H^2(A, C_0) is not modelled")
def _c37(inst, ctx):
    if not inst.is_unitization:
        return []
    a, u = inst.left, inst.product
    return [
        Clause("forward", ctx.wa(a), ctx.wa(u)),
        Clause("converse", and3(ctx.delta(a), ctx.wa(u)), ctx.wa(a)),
        Clause("semisimple", ctx.report(a).semisimple, iff3(ctx.wa(a), ctx.wa(u))),
    ]


@register("T3.6", "lau",
          "the direct sum is cyclically weakly amenable / cyclically amenable / weakly amenable "
          "iff both summands are", _CONT)
def _t36(inst, ctx):
    if not inst.theta_zero:
        return []
    a1, a2, s = inst.left, inst.right, inst.product
    return [
        Clause("(i)", True, iff3(ctx.cwa(s), and3(ctx.cwa(a1), ctx.cwa(a2)))),
        Clause("(ii)", True, iff3(ctx.ca(s), and3(ctx.ca(a1), ctx.ca(a2)))),
        Clause("(iii)", True, iff3(ctx.wa(s), and3(ctx.wa(a1), ctx.wa(a2)))),
    ]


@register("C3.8", "lau",
          "a split extension 0 -> I -> A -> A/I -> 0 with A weakly amenable has I and A/I "
          "weakly amenable",
          "split sequences realised as A1 (+) A2 with I the first block; the splitting is verified")
def _c38(inst, ctx):
    if not inst.theta_zero:
        return []
    s = inst.product
    n1 = inst.left.dim
    block = la.span([s.basis_vector(i) for i in range(n1)], s.dim)
    ideal = alg.IdealSubspace(s, block)
    i_alg = alg.subalgebra(s, block)
    q, pi = alg.quotient(s, ideal)
    section = Morphism(q, s, [[ONE if r == n1 + c else ZERO for c in range(q.dim)] for r in range(s.dim)])
    split = alg.is_retraction(pi, section)
    return [Clause("(i)", and3(split, ctx.wa(s)), and3(ctx.wa(i_alg), ctx.wa(q)))]


@register("T4.1", "tensor", "A1 (x) A2 is 0-point amenable iff both factors are",
          "projective tensor product is the algebraic tensor product in finite dimension")
def _t41(inst, ctx):
    p = inst.product
    return [Clause("iff", True, iff3(ctx.zpa(p), and3(ctx.zpa(inst.left), ctx.zpa(inst.right))))]


@register("C4.2", "tensor",
          "with nonempty character spaces: A1(x)A2 CWA <=> A1, A2 CWA <=> A1#, A2# CWA "
          "<=> A1#(x)A2# CWA",
          "projective tensor product is the algebraic tensor product in finite dimension")
def _c42(inst, ctx):
    a1, a2 = inst.left, inst.right
    u1, u2 = alg.unitize(a1), alg.unitize(a2)
    concl = all_equal3(
        ctx.cwa(inst.product),
        and3(ctx.cwa(a1), ctx.cwa(a2)),
        and3(ctx.cwa(u1), ctx.cwa(u2)),
        ctx.cwa(alg.tensor(u1, u2)),
    )
    return [Clause("(a)-(d)", and3(ctx.delta(a1), ctx.delta(a2)), concl)]


@register("T4.3", "tensor",
          "for unital factors with characters, cyclic (weak) amenability of A1(x)A2 passes to "
          "both factors", "projective tensor product is the algebraic tensor product")
def _t43(inst, ctx):
    a1, a2, p = inst.left, inst.right, inst.product
    r1, r2 = ctx.report(a1), ctx.report(a2)
    base = and3(r1.unital, r2.unital, ctx.delta(a1), ctx.delta(a2))
    return [
        Clause("(i)", and3(base, ctx.ca(p)), and3(ctx.ca(a1), ctx.ca(a2))),
        Clause("(ii)", and3(base, ctx.wa(p)), and3(ctx.wa(a1), ctx.wa(a2))),
    ]


@register("T5.op", "algebra", "A and its opposite algebra have the same amenability verdicts",
          "no analytic hypotheses")
def _t5op(inst, ctx):
    a = inst.algebra
    o = alg.opposite(a)
    r, ro = ctx.report(a), ctx.report(o)
    same = and3(*(iff3(x, y) for x, y in zip(r.verdicts, ro.verdicts)))
    return [Clause("verdicts", True, and3(same, r.derivation_dim == ro.derivation_dim))]


@register("T5.bidual", "algebra",
          "amenability properties of A** pass to A",
          "A** is canonically A in finite dimension, so this is an identity check and "
          "non-probative")
def _t5bidual(inst, ctx):
    a = inst.algebra
    bidual = Algebra(a.table, a.unit, label=f"bidual({a.label})")
    return [
        Clause("CWA", ctx.cwa(bidual), ctx.cwa(a)),
        Clause("PA", ctx.pa(bidual), ctx.pa(a)),
        Clause("0-PA", ctx.zpa(bidual), ctx.zpa(a)),
    ]


@register("DECOMP", "algebra", "weakly amenable iff cyclically amenable and cyclically weakly amenable",
          "pure linear algebra; no analytic content")
def _decomp(inst, ctx):
    a = inst.algebra
    return [Clause("iff", True, iff3(ctx.wa(a), and3(ctx.ca(a), ctx.cwa(a))))]


@register("BRIDGE", "algebra",
          "with a nonempty character space: CWA <=> 0-point amenable <=> point amenable and essential",
          "essential means A^2 = A; an incomplete character list makes the clause inconclusive")
def _bridge(inst, ctx):
    a = inst.algebra
    r = ctx.report(a)
    # an incomplete list leaves the point-amenability verdicts conditional
    hyp = ctx.delta(a)
    return [
        Clause("CWA<=>0-PA", hyp, iff3(ctx.cwa(a), ctx.zpa(a))),
        Clause("0-PA<=>PA&essential", hyp, iff3(ctx.zpa(a), and3(ctx.pa(a), r.essential))),
    ]


# ---------------------------------------------------------------------------
# outcomes


@dataclass
class CheckOutcome:
    id: str
    instances_tried: int = 0
    passed: int = 0
    vacuous_count: int = 0
    inconclusive_count: int = 0
    counterexamples: list = field(default_factory=list)
    clauses: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.counterexamples:
            return "counterexample"
        if self.passed:
            return "pass"
        if self.inconclusive_count:
            return "inconclusive"
        return "untested"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "instances_tried": self.instances_tried,
            "passed": self.passed,
            "vacuous": self.vacuous_count,
            "inconclusive": self.inconclusive_count,
            "counterexamples": len(self.counterexamples),
            "clauses": {k: dict(v) for k, v in sorted(self.clauses.items())},
        }


def _witness(check: TheoremCheck, inst: Instance, clause: Clause) -> dict:
    return {
        "check": {
            "id": check.id,
            "clause": clause.label,
            "statement": check.statement,
            "finite_dim_note": check.finite_dim_note,
            "hypothesis": verdict_str(clause.hypothesis),
            "conclusion": verdict_str(clause.conclusion),
        },
        "instance": instance_to_dict(inst),
    }


def get_check(id: str) -> TheoremCheck:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownCheck(id) from None


def run_check(check: TheoremCheck | str, instances: Iterable[Instance],
              ctx: Optional[Context] = None) -> CheckOutcome:
    """Evaluate one registry entry on every instance of the matching shape."""
    if isinstance(check, str):
        check = get_check(check)
    ctx = ctx or Context()
    out = CheckOutcome(check.id)
    for inst in instances:
        if inst.shape != check.shape:
            continue
        clauses = check.evaluate(inst, ctx)
        if not clauses:
            continue
        out.instances_tried += 1
        statuses = []
        for c in clauses:
            s = c.status
            statuses.append(s)
            tally = out.clauses.setdefault(c.label, {"pass": 0, "vacuous": 0, "inconclusive": 0, "violated": 0})
            tally[s] += 1
            if s == "violated":
                out.counterexamples.append(_witness(check, inst, c))
        if "violated" in statuses:
            continue
        if "pass" in statuses:
            out.passed += 1
        elif "inconclusive" in statuses:
            out.inconclusive_count += 1
        else:
            out.vacuous_count += 1
    return out


check = run_check


def reverify(witness: dict, registry: Optional[dict] = None) -> bool:
    """Reload a witness and confirm the recorded clause is still violated."""
    registry = registry or REGISTRY
    info = witness["check"]
    chk = registry[info["id"]]
    inst = instance_from_dict(witness["instance"])
    for c in chk.evaluate(inst, Context()):
        if c.label == info["clause"] and c.status == "violated":
            return True
    return False


# ---------------------------------------------------------------------------
# random instances

TENSOR_FACTOR_CAP = 4


def _leaves(max_dim: int) -> list:
    return [(e.name, e.algebra) for e in corpus() if e.algebra.dim <= max_dim]


class Generator:
    """Seeded random recipes over corpus leaves.

    Nodes are lau (theta drawn from the found characters of the right factor
    plus zero), direct sum, unitize, tensor, opposite and principal-ideal
    quotient. Every construction keeps associativity, so outputs are valid.
    """

    OPS = ("lau", "sum", "unitize", "tensor", "opposite", "quotient")

    def __init__(self, seed: int, max_dim: int, ctx: Optional[Context] = None, depth: int = 3):
        if max_dim < 1:
            raise ValueError("max_dim must be at least 1")
        self.rng = random.Random(seed)
        self.max_dim = max_dim
        self.depth = depth
        self.ctx = ctx or Context()
        self.leaves = _leaves(max_dim)

    def leaf(self, budget: int) -> tuple[Algebra, str]:
        name, a = self.rng.choice([(n, a) for n, a in self.leaves if a.dim <= budget])
        return a, name

    def pick_theta(self, b: Algebra) -> tuple:
        options = [tuple([ZERO] * b.dim)] + list(self.ctx.chars(b).characters)
        return self.rng.choice(options)

    def principal_ideal(self, a: Algebra) -> alg.IdealSubspace:
        seed = [Fraction(self.rng.choice((0, 0, 1, -1, 2))) for _ in range(a.dim)]
        if not any(seed) and a.dim:
            seed[self.rng.randrange(a.dim)] = ONE
        return alg.ideal_generated_by(a, [seed])

    def draw(self, budget: int, depth: Optional[int] = None) -> tuple[Algebra, str]:
        depth = self.depth if depth is None else depth
        if depth == 0 or self.rng.random() < 0.25:
            return self.leaf(budget)
        op = self.rng.choice(self.OPS)
        if op in ("lau", "sum") and budget >= 2:
            left, lr = self.draw(self.rng.randint(1, budget - 1), depth - 1)
            right, rr = self.draw(budget - left.dim, depth - 1)
            if op == "sum":
                return alg.direct_sum(left, right), f"sum({lr}, {rr})"
            theta = self.pick_theta(right)
            th = ",".join(la.format_rational(x) for x in theta)
            return alg.lau_product(left, right, theta), f"lau({lr}, {rr}, theta=[{th}])"
        if op == "unitize" and budget >= 2:
            child, cr = self.draw(budget - 1, depth - 1)
            return alg.unitize(child), f"unitize({cr})"
        if op == "tensor" and budget >= 2:
            cap = min(TENSOR_FACTOR_CAP, budget)
            left, lr = self.draw(cap, depth - 1)
            right, rr = self.draw(min(TENSOR_FACTOR_CAP, budget // left.dim), depth - 1)
            if left.dim * right.dim > budget:
                return left, lr
            return alg.tensor(left, right), f"tensor({lr}, {rr})"
        if op == "opposite":
            child, cr = self.draw(budget, depth - 1)
            return alg.opposite(child), f"op({cr})"
        if op == "quotient":
            child, cr = self.draw(budget, depth - 1)
            ideal = self.principal_ideal(child)
            q, _ = alg.quotient(child, ideal)
            if q.dim == 0:
                return child, cr
            return q, f"quot({cr}, dim I={ideal.space.dim})"
        return self.leaf(budget)

    def algebra(self) -> tuple[Algebra, str]:
        a, recipe = self.draw(self.max_dim)
        return a.relabel(recipe), recipe

    def invertible(self, n: int) -> tuple:
        """A random integer matrix of determinant +-1 (permuted unitriangular product)."""
        up = [[Fraction(int(i == j) if j <= i else 0) for j in range(n)] for i in range(n)]
        lo = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if j < i:
                    up[i][j] = Fraction(self.rng.choice((-1, 0, 0, 1)))
                elif j > i:
                    lo[i][j] = Fraction(self.rng.choice((-1, 0, 0, 1)))
        perm = list(range(n))
        self.rng.shuffle(perm)
        m = la.matmul(up, lo)
        return tuple(m[p] for p in perm)


def generate(seed: int, count: int, max_dim: int) -> list[tuple[Algebra, str]]:
    """``count`` random algebras of dimension at most ``max_dim``; deterministic in ``seed``."""
    gen = Generator(seed, max_dim)
    return [gen.algebra() for _ in range(count)]


def build_instances(seed: int, trials: int, max_dim: int, include_corpus: bool = True,
                    ctx: Optional[Context] = None) -> list[Instance]:
    """Instances of every shape from corpus algebras plus ``trials`` generated ones."""
    ctx = ctx or Context()
    gen = Generator(seed, max_dim, ctx)
    base = [(e.algebra, e.name) for e in corpus()] if include_corpus else []
    generated = [gen.algebra() for _ in range(trials)]
    pool = [(a, r) for a, r in base + generated if a.dim <= max_dim]
    rng = random.Random(seed * 1_000_003 + 17)
    q = alg.scalars()
    out: list[Instance] = [AlgebraInstance(a, r) for a, r in pool]

    def partner(limit: int):
        cands = [(b, r) for b, r in pool if 1 <= b.dim <= limit]
        return rng.choice(cands) if cands else None

    for a, r in pool:
        if a.dim < max_dim:
            pb = partner(max_dim - a.dim)
            if pb is not None:
                b, rb = pb
                theta = gen.pick_theta(b)
                out.append(LauInstance(a, b, theta, f"lau({r}, {rb})"))
                out.append(LauInstance(a, b, (ZERO,) * b.dim, f"sum({r}, {rb})"))
                prod = alg.lau_product(a, b, theta)
                out.append(MorphismInstance(alg.lau_projection_second(a, b, prod),
                                            alg.lau_injection_second(a, b, prod),
                                            "lau_projection", f"pi2 on lau({r}, {rb})"))
            out.append(LauInstance(a, q, (ONE,), f"unitize({r})"))
        if 2 * a.dim <= max_dim:
            # direct sums are a priority falsification target; A (+) A is the cheapest probe
            out.append(LauInstance(a, a, (ZERO,) * a.dim, f"sum({r}, {r})"))
        # tensor pairs small enough for the unitized tensor of C4.2
        if 1 <= a.dim <= TENSOR_FACTOR_CAP:
            limit = min(TENSOR_FACTOR_CAP, max_dim // (a.dim + 1) - 1)
            pb = partner(limit) if limit >= 1 else None
            if pb is not None:
                b, rb = pb
                out.append(TensorInstance(a, b, f"tensor({r}, {rb})"))
                chars_b = ctx.chars(b).characters
                if alg.is_unital(b) and chars_b:
                    prod = alg.tensor(a, b)
                    lam, gam = alg.tensor_slice_retraction(a, b, prod, rng.choice(chars_b))
                    out.append(MorphismInstance(lam, gam, "tensor_slice", f"slice on tensor({r}, {rb})"))
        if a.dim:
            ideal = gen.principal_ideal(a)
            quo, pi = alg.quotient(a, ideal)
            out.append(MorphismInstance(pi, None, "quotient", f"{r} / ideal of dim {ideal.space.dim}"))
            p = gen.invertible(a.dim)
            rebased = alg.change_basis(a, p)
            phi = Morphism(a, rebased, alg.inverse(p))
            psi = Morphism(rebased, a, p)
            out.append(MorphismInstance(phi, psi, "isomorphism", f"rebase({r})"))
    return out


# ---------------------------------------------------------------------------
# full audit


@dataclass
class Summary:
    seed: int
    trials: int
    max_dim: int
    instances: int
    outcomes: list

    @property
    def counterexample_found(self) -> bool:
        return any(o.counterexamples for o in self.outcomes)

    @property
    def exit_code(self) -> int:
        return 1 if self.counterexample_found else 0

    def to_dict(self) -> dict:
        return {
            "tool": "amenability",
            "seed": self.seed,
            "trials": self.trials,
            "max_dim": self.max_dim,
            "field": "Q",
            "instances": self.instances,
            "counterexample_found": self.counterexample_found,
            "checks": [
                dict(o.to_dict(), finite_dim_note=REGISTRY[o.id].finite_dim_note
                     if o.id in REGISTRY else "")
                for o in self.outcomes
            ],
        }

    def text(self) -> str:
        lines = [f"theorem audit: seed={self.seed} trials={self.trials} max_dim={self.max_dim} "
                 f"instances={self.instances} field=Q"]
        for o in self.outcomes:
            lines.append(
                f"  {o.id:<10} {o.status:<15} tried={o.instances_tried:<5} pass={o.passed:<5} "
                f"vacuous={o.vacuous_count:<5} inconclusive={o.inconclusive_count:<4} "
                f"counterexamples={len(o.counterexamples)}"
            )
        lines.append("result: " + ("COUNTEREXAMPLE FOUND" if self.counterexample_found
                                   else "no counterexample"))
        return "\n".join(lines)


def check_all(seed: int = 0, trials: int = 200, max_dim: int = 12,
              ids: Optional[Sequence[str]] = None, registry: Optional[dict] = None,
              include_corpus: bool = True) -> Summary:
    registry = registry or REGISTRY
    ids = list(ids) if ids is not None else list(registry)
    checks = []
    for i in ids:
        if i not in registry:
            raise UnknownCheck(i)
        checks.append(registry[i])
    ctx = Context()
    instances = build_instances(seed, trials, max_dim, include_corpus, ctx)
    outcomes = [run_check(c, instances, ctx) for c in checks]
    return Summary(seed, trials, max_dim, len(instances), outcomes)


def write_witnesses(summary: Summary, directory) -> list[Path]:
    directory = Path(directory)
    paths = []
    for o in summary.outcomes:
        for k, w in enumerate(o.counterexamples):
            directory.mkdir(parents=True, exist_ok=True)
            path = directory / f"{o.id.replace('/', '_')}-{k:03d}.json"
            path.write_text(dumps(w), encoding="utf-8")
            paths.append(path)
    return paths


def load_witness(path) -> dict:
    return load_json(path)
