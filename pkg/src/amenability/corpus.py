"""Small named algebras used as test corpus and as leaves of random recipes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, find_unit, scalars, unitize, zero_algebra


def pointwise(n: int) -> Algebra:
    """``Q^n`` with coordinate-wise product."""
    return Algebra.from_products(n, {(i, i): {i: 1} for i in range(n)},
                                 unit=[1] * n, label=f"Q{n}")


def truncated_polynomials(n: int) -> Algebra:
    """``Q[x]/(x^n)`` on the basis ``1, x, ..., x^(n-1)``."""
    prods = {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}
    return Algebra.from_products(n, prods, unit=[1] + [0] * (n - 1), label=f"Qx{n}")


def nilpotent_cube() -> Algebra:
    """``xQ[x]/(x^3)`` on the basis ``x, x^2``: no unit, square spanned by ``x^2``."""
    return Algebra.from_products(2, {(0, 0): {1: 1}}, label="N3")


def upper_triangular(n: int) -> Algebra:
    """``T_n(Q)`` on the basis ``e_ij`` (i <= j) in row-major order."""
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {p: k for k, p in enumerate(idx)}
    prods = {}
    for a, (i, j) in enumerate(idx):
        for b, (k, l) in enumerate(idx):
            if j == k:
                prods[(a, b)] = {pos[(i, l)]: 1}
    unit = [1 if i == j else 0 for i, j in idx]
    return Algebra.from_products(len(idx), prods, unit=unit, label=f"T{n}")


def matrix_algebra(n: int) -> Algebra:
    """``M_n(Q)`` on matrix units in row-major order."""
    idx = [(i, j) for i in range(n) for j in range(n)]
    prods = {}
    for a, (i, j) in enumerate(idx):
        for b, (k, l) in enumerate(idx):
            if j == k:
                prods[(a, b)] = {i * n + l: 1}
    unit = [1 if i == j else 0 for i, j in idx]
    return Algebra.from_products(n * n, prods, unit=unit, label=f"M{n}")


def group_algebra_c2() -> Algebra:
    """``Q[C_2]`` on the basis ``1, g`` with ``g^2 = 1``."""
    prods = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}}
    return Algebra.from_products(2, prods, unit=[1, 0], label="QC2")


def quadratic_field(d: int = 2) -> Algebra:
    """``Q[x]/(x^2 - d)``; for non-square ``d`` its characters are irrational."""
    prods = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: d}}
    return Algebra.from_products(2, prods, unit=[1, 0], label=f"Qsqrt{d}")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    algebra: Algebra
    recipe: str
    expected: dict = field(default_factory=dict)


def corpus() -> list[CorpusEntry]:
    """Named algebras with the report fragments they are known to have."""
    out = [
        CorpusEntry("Q", scalars(), "leaf", {
            "derivation_dim": 0, "inner_dim": 0, "cyclic_dim": 0,
            "weakly_amenable": True, "cyclically_amenable": True,
            "cyclically_weakly_amenable": True, "point_amenable": True,
            "zero_point_amenable": True}),
        CorpusEntry("Q2", pointwise(2), "leaf", {"characters": 2, "weakly_amenable": True}),
        CorpusEntry("Q3", pointwise(3), "leaf", {"characters": 3, "weakly_amenable": True}),
    ]
    for n in range(1, 5):
        expected = {"derivation_dim": n * n, "inner_dim": 0, "cyclic_dim": n * (n - 1) // 2,
                    "characters": 0, "essential": False, "zero_point_derivation_dim": n}
        if n == 2:
            expected.update({
                "quasi_additive_dim": 4, "inner_qa_dim": 0, "cyclic_qa_dim": 1,
                "weakly_amenable": False, "cyclically_amenable": False,
                "cyclically_weakly_amenable": False, "point_amenable": True,
                "zero_point_amenable": False})
        out.append(CorpusEntry(f"Z{n}", zero_algebra(n), "leaf", expected))
    # basis (x, 1): the unitization order, so the recipe reproduces the table exactly
    out.append(CorpusEntry("Qx2", unitize(zero_algebra(1)), "unitize(Z1)", {
        "derivation_dim": 1, "inner_dim": 0, "cyclic_dim": 0, "point_derivation_dims": (1,),
        "weakly_amenable": False, "cyclically_amenable": True,
        "cyclically_weakly_amenable": False, "point_amenable": False,
        "zero_point_amenable": False, "essential": True, "commutative": True,
        "characters": 1, "radical_dim": 1}))
    out.append(CorpusEntry("Qx3", truncated_polynomials(3), "leaf", {"characters": 1, "radical_dim": 2}))
    out.append(CorpusEntry("Qx4", truncated_polynomials(4), "leaf", {"characters": 1, "radical_dim": 3}))
    out.append(CorpusEntry("N3", nilpotent_cube(), "leaf", {
        "square_dim": 1, "essential": False, "characters": 0}))
    out.append(CorpusEntry("T2", upper_triangular(2), "leaf", {"characters": 2, "radical_dim": 1}))
    out.append(CorpusEntry("T3", upper_triangular(3), "leaf", {"characters": 3, "radical_dim": 3}))
    out.append(CorpusEntry("M2", matrix_algebra(2), "leaf", {
        "derivation_dim": 3, "inner_dim": 3, "weakly_amenable": True,
        "cyclically_amenable": True, "cyclically_weakly_amenable": True,
        "point_amenable": True, "zero_point_amenable": True,
        "semisimple": True, "characters": 0, "character_set_complete": True}))
    out.append(CorpusEntry("QC2", group_algebra_c2(), "leaf", {"characters": 2, "semisimple": True}))
    out.append(CorpusEntry("Qsqrt2", quadratic_field(2), "leaf", {
        "characters": 0, "character_set_complete": False, "semisimple": True}))
    for e in out:
        assert e.algebra.unit is None or e.algebra.unit == find_unit(e.algebra)
    return [CorpusEntry(e.name, e.algebra.relabel(e.name), e.recipe, e.expected) for e in out]


def by_name(name: str) -> Algebra:
    for e in corpus():
        if e.name == name:
            return e.algebra
    raise KeyError(name)


CORPUS_NAMES = tuple(e.name for e in corpus())
