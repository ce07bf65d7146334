"""Finite-dimensional associative algebras over Q, given by structure constants.

``table[i][j][k]`` is the coefficient of ``e_k`` in ``e_i e_j``. All
constructions fix their basis order (Lau and direct sum: left block then
right block; tensor: lexicographic pairs) so outputs are reproducible
entry for entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from . import exactla as la
from .exactla import Subspace, Vector

ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraError(ValueError):
    """Malformed or inconsistent algebra data."""


@dataclass(frozen=True)
class Algebra:
    """Structure-constant algebra.

    Equality and hashing look only at the table and the declared unit;
    labels and declared characters are metadata.
    """

    table: tuple
    unit: Optional[Vector] = None
    label: str = field(default="", compare=False)
    declared_characters: Optional[tuple] = field(default=None, compare=False)
    characters_complete: bool = field(default=False, compare=False)

    def __post_init__(self):
        n = len(self.table)
        try:
            table = tuple(
                tuple(tuple(la.to_fraction(x) for x in self.table[i][j]) for j in range(n))
                for i in range(n)
            )
        except (TypeError, IndexError) as exc:
            raise AlgebraError(f"malformed structure tensor: {exc}") from None
        for i in range(n):
            if len(self.table[i]) != n or any(len(self.table[i][j]) != n for j in range(n)):
                raise AlgebraError(f"structure tensor is not {n}x{n}x{n} (row {i})")
        object.__setattr__(self, "table", table)
        if self.unit is not None:
            if len(self.unit) != n:
                raise AlgebraError("unit has the wrong length")
            object.__setattr__(self, "unit", la.vector(self.unit))
        if self.declared_characters is not None:
            chars = tuple(la.vector(c) for c in self.declared_characters)
            for c in chars:
                if len(c) != n:
                    raise AlgebraError("declared character has the wrong length")
            object.__setattr__(self, "declared_characters", chars)

    @property
    def dim(self) -> int:
        return len(self.table)

    @cached_property
    def products(self) -> tuple:
        """Sparse table: ``products[i][j]`` is a tuple of ``(k, c)`` with ``c != 0``."""
        return tuple(
            tuple(tuple((k, c) for k, c in enumerate(self.table[i][j]) if c) for j in range(self.dim))
            for i in range(self.dim)
        )

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def zero_vector(self) -> Vector:
        return (ZERO,) * self.dim

    def __repr__(self) -> str:
        name = self.label or "Algebra"
        return f"<{name} dim={self.dim}>"

    @classmethod
    def from_products(
        cls,
        dim: int,
        products: Mapping[tuple, Mapping[int, object]],
        unit: Optional[Sequence] = None,
        label: str = "",
    ) -> "Algebra":
        """Build from ``{(i, j): {k: coeff}}``; missing products are zero."""
        t = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            for k, c in terms.items():
                t[i][j][k] = la.to_fraction(c)
        return cls(t, unit=unit, label=label)

    def relabel(self, label: str) -> "Algebra":
        return Algebra(self.table, self.unit, label, self.declared_characters, self.characters_complete)

    def with_characters(self, chars: Iterable[Sequence], complete: bool) -> "Algebra":
        return Algebra(self.table, self.unit, self.label, tuple(chars), complete)


# ---------------------------------------------------------------------------
# arithmetic


def multiply(a: Algebra, x: Sequence, y: Sequence) -> Vector:
    if len(x) != a.dim or len(y) != a.dim:
        raise AlgebraError(f"vectors must have length {a.dim}")
    out = [ZERO] * a.dim
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = a.products[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            s = xi * yj
            for k, c in row[j]:
                out[k] += s * c
    return tuple(out)


def left_mult_matrix(a: Algebra, x: Sequence) -> tuple:
    """Matrix of ``y -> x y`` (columns are images of basis vectors)."""
    cols = [multiply(a, x, a.basis_vector(j)) for j in range(a.dim)]
    return la.transpose(cols, cols=a.dim)


def _multiplicative(a: Algebra, phi: Sequence) -> bool:
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = sum((c * phi[k] for k, c in a.products[i][j]), ZERO)
            if lhs != phi[i] * phi[j]:
                return False
    return True


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    associativity_violation: Optional[tuple] = None
    unit_violation: Optional[tuple] = None
    message: str = "valid"


def validate(a: Algebra) -> ValidationReport:
    """Check associativity on basis triples and the declared unit."""
    n = a.dim
    t = a.products
    for i in range(n):
        for j in range(n):
            # (e_i e_j) e_k  vs  e_i (e_j e_k), compared coefficient-wise
            for k in range(n):
                left = [ZERO] * n
                for m, c in t[i][j]:
                    for l, d in t[m][k]:
                        left[l] += c * d
                right = [ZERO] * n
                for m, c in t[j][k]:
                    for l, d in t[i][m]:
                        right[l] += c * d
                if left != right:
                    l = next(l for l in range(n) if left[l] != right[l])
                    return ValidationReport(
                        False,
                        associativity_violation=(i, j, k, l),
                        message=f"associativity fails at (i,j,k,l)=({i},{j},{k},{l})",
                    )
    if a.unit is not None:
        for i in range(n):
            e = a.basis_vector(i)
            if multiply(a, a.unit, e) != e:
                return ValidationReport(False, unit_violation=(i, "left"),
                                        message=f"unit * e_{i} != e_{i}")
            if multiply(a, e, a.unit) != e:
                return ValidationReport(False, unit_violation=(i, "right"),
                                        message=f"e_{i} * unit != e_{i}")
    return ValidationReport(True)


def find_unit(a: Algebra) -> Optional[Vector]:
    """The multiplicative identity, if the algebra has one."""
    n = a.dim
    if n == 0:
        return ()
    # unknown u; equations u e_i = e_i and e_i u = e_i, coordinate-wise
    rows, rhs = [], []
    for i in range(n):
        for l in range(n):
            rows.append([a.table[m][i][l] for m in range(n)])
            rhs.append(ONE if l == i else ZERO)
            rows.append([a.table[i][m][l] for m in range(n)])
            rhs.append(ONE if l == i else ZERO)
    return la.solve(rows, rhs, cols=n)


def is_unital(a: Algebra) -> bool:
    return find_unit(a) is not None


def is_commutative(a: Algebra) -> bool:
    n = a.dim
    return all(a.table[i][j] == a.table[j][i] for i in range(n) for j in range(i + 1, n))


def _with_unit(table, label: str) -> Algebra:
    alg = Algebra(table, label=label)
    u = find_unit(alg)
    if u is None:
        return alg
    return Algebra(table, unit=u, label=label)


# ---------------------------------------------------------------------------
# constructions


def zero_algebra(n: int, label: str = "") -> Algebra:
    return Algebra([[[ZERO] * n for _ in range(n)] for _ in range(n)], label=label or f"Z{n}")


def scalars(label: str = "Q") -> Algebra:
    return Algebra([[[ONE]]], unit=(ONE,), label=label)


def lau_product(a: Algebra, b: Algebra, theta: Sequence, label: str = "") -> Algebra:
    """theta-Lau product on the product space, ``a`` block first.

    ``(a1,a2)(x1,x2) = (a1 x1 + theta(x2) a1 + theta(a2) x1, a2 x2)``.
    """
    theta = la.vector(theta)
    if len(theta) != b.dim:
        raise AlgebraError("theta must have the dimension of the second factor")
    if any(theta) and not _multiplicative(b, theta):
        raise AlgebraError("theta is not a character of the second factor")
    n1, n2 = a.dim, b.dim
    n = n1 + n2
    t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            for k, c in a.products[i][j]:
                t[i][j][k] = c
        for j in range(n2):
            if theta[j]:
                t[i][n1 + j][i] += theta[j]
                t[n1 + j][i][i] += theta[j]
    for i in range(n2):
        for j in range(n2):
            for k, c in b.products[i][j]:
                t[n1 + i][n1 + j][n1 + k] = c
    return _with_unit(t, label or f"lau({a.label},{b.label})")


def direct_sum(a: Algebra, b: Algebra, label: str = "") -> Algebra:
    return lau_product(a, b, (ZERO,) * b.dim, label=label or f"sum({a.label},{b.label})")


def unitize(a: Algebra, label: str = "") -> Algebra:
    """Adjoin a unit; the new unit is the last basis vector."""
    return lau_product(a, scalars(), (ONE,), label=label or f"unitize({a.label})")


def tensor(a: Algebra, b: Algebra, label: str = "") -> Algebra:
    n1, n2 = a.dim, b.dim
    n = n1 * n2
    t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for k in range(n1):
            pa = a.products[i][k]
            if not pa:
                continue
            for j in range(n2):
                for l in range(n2):
                    for p, cb in b.products[j][l]:
                        row = t[i * n2 + j][k * n2 + l]
                        for m, ca in pa:
                            row[m * n2 + p] = ca * cb
    return _with_unit(t, label or f"tensor({a.label},{b.label})")


def opposite(a: Algebra, label: str = "") -> Algebra:
    n = a.dim
    t = [[a.table[j][i] for j in range(n)] for i in range(n)]
    return Algebra(t, unit=a.unit, label=label or f"op({a.label})")


def change_basis(a: Algebra, p: Sequence[Sequence], label: str = "") -> Algebra:
    """The same algebra written in the basis given by the columns of ``p``."""
    n = a.dim
    pinv = inverse(p)
    cols = [tuple(p[r][c] for r in range(n)) for c in range(n)]
    t = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(la.matvec(pinv, multiply(a, cols[i], cols[j])))
        t.append(row)
    return _with_unit(t, label or f"rebase({a.label})")


def inverse(p: Sequence[Sequence]) -> tuple:
    n = len(p)
    aug = [list(p[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    red, pivots, r = la.rref(aug, cols=2 * n)
    if pivots[:n] != list(range(n)) or r != n:
        raise AlgebraError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


# ---------------------------------------------------------------------------
# subspaces of an algebra


def square(a: Algebra) -> Subspace:
    """``A^2``, the span of all basis products."""
    return la.span([a.table[i][j] for i in range(a.dim) for j in range(a.dim)], a.dim)


def is_essential(a: Algebra) -> bool:
    return square(a).dim == a.dim


@dataclass(frozen=True)
class IdealSubspace:
    parent: Algebra
    space: Subspace

    def __post_init__(self):
        if not is_ideal(self.parent, self.space):
            raise AlgebraError("subspace is not a two-sided ideal")


def is_ideal(a: Algebra, s: Subspace) -> bool:
    for v in s.basis:
        for i in range(a.dim):
            e = a.basis_vector(i)
            if not la.is_member(s, multiply(a, e, v)) or not la.is_member(s, multiply(a, v, e)):
                return False
    return True


def ideal_generated_by(a: Algebra, seeds: Iterable[Sequence]) -> IdealSubspace:
    space = la.span(list(seeds), a.dim)
    while True:
        gens = list(space.basis)
        for v in space.basis:
            for i in range(a.dim):
                e = a.basis_vector(i)
                gens.append(multiply(a, e, v))
                gens.append(multiply(a, v, e))
        grown = la.span(gens, a.dim)
        if grown.dim == space.dim:
            return IdealSubspace(a, space)
        space = grown


def commutator_ideal(a: Algebra) -> IdealSubspace:
    seeds = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            d = tuple(x - y for x, y in zip(a.table[i][j], a.table[j][i]))
            if any(d):
                seeds.append(d)
    return ideal_generated_by(a, seeds)


def subalgebra(a: Algebra, s: Subspace, label: str = "") -> Algebra:
    """The algebra structure on a multiplicatively closed subspace, in its RREF basis."""
    basis, pivots = s.basis, s.pivots
    r = len(basis)
    t = []
    for x in basis:
        row = []
        for y in basis:
            prod = multiply(a, x, y)
            coords = tuple(prod[p] for p in pivots)
            if tuple(sum((c * b[k] for c, b in zip(coords, basis)), ZERO) for k in range(a.dim)) != prod:
                raise AlgebraError("subspace is not closed under multiplication")
            row.append(coords)
        t.append(row)
    return _with_unit(t if r else [], label or f"sub({a.label})")


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class Morphism:
    """Linear map ``source -> target`` as a ``target.dim x source.dim`` matrix."""

    source: Algebra
    target: Algebra
    matrix: tuple

    def __post_init__(self):
        m = tuple(la.vector(r) for r in self.matrix)
        if len(m) != self.target.dim or any(len(r) != self.source.dim for r in m):
            raise AlgebraError("morphism matrix has the wrong shape")
        object.__setattr__(self, "matrix", m)

    def __call__(self, x: Sequence) -> Vector:
        if len(x) != self.source.dim:
            raise AlgebraError("argument has the wrong length")
        return la.matvec(self.matrix, x)

    @property
    def rank(self) -> int:
        return la.rank(self.matrix, cols=self.source.dim)


def identity_morphism(a: Algebra) -> Morphism:
    return Morphism(a, a, la.identity(a.dim))


def compose(phi: Morphism, psi: Morphism) -> Morphism:
    """``phi o psi``."""
    if psi.target.dim != phi.source.dim:
        raise AlgebraError("morphisms are not composable")
    if phi.source.dim == 0:
        m = tuple((ZERO,) * psi.source.dim for _ in range(phi.target.dim))
    else:
        m = la.matmul(phi.matrix, psi.matrix) if psi.source.dim else tuple(() for _ in range(phi.target.dim))
    return Morphism(psi.source, phi.target, m)


def _scaled(values: np.ndarray) -> tuple[np.ndarray, int]:
    """Object array of Fractions -> (integer object array, common denominator)."""
    d = 1
    for x in values.flat:
        d = math.lcm(d, x.denominator)
    return np.vectorize(lambda x: int(x * d), otypes=[object])(values), d


def check_homomorphism(phi: Morphism) -> bool:
    """``phi(e_i e_j) = phi(e_i) phi(e_j)`` for all basis pairs, in exact integer arithmetic."""
    a, b = phi.source, phi.target
    if a.dim == 0:
        return True
    if b.dim == 0:
        return True
    ca, da = _scaled(np.array(a.table, dtype=object).reshape(a.dim, a.dim, a.dim))
    cb, db = _scaled(np.array(b.table, dtype=object).reshape(b.dim, b.dim, b.dim))
    p, dp = _scaled(np.array(phi.matrix, dtype=object).reshape(b.dim, a.dim))
    lhs = np.tensordot(ca, p, axes=([2], [1]))  # [i, j, r]
    left = np.tensordot(p, cb, axes=([0], [0]))  # [i, q, r]
    rhs = np.tensordot(p, left, axes=([0], [1]))  # [j, i, r]
    return bool(np.all(lhs * (dp * db) == rhs.transpose(1, 0, 2) * da))


def is_surjective(phi: Morphism) -> bool:
    """Dense range, in finite dimension."""
    return phi.rank == phi.target.dim


def dual_composition_full(phi: Morphism) -> bool:
    """Whether ``F -> F o phi`` maps the target dual onto the source dual."""
    return phi.rank == phi.source.dim


def is_retraction(phi: Morphism, psi: Morphism) -> bool:
    if psi.source != phi.target or psi.target != phi.source:
        raise AlgebraError("psi must map phi's target back to its source")
    if not (check_homomorphism(phi) and check_homomorphism(psi)):
        return False
    return compose(phi, psi).matrix == la.identity(phi.target.dim)


def quotient(a: Algebra, ideal: IdealSubspace, label: str = "") -> tuple[Algebra, Morphism]:
    """``A/I`` on the non-pivot coordinates of I's RREF basis, with the projection."""
    if ideal.parent != a:
        raise AlgebraError("ideal belongs to a different algebra")
    s = ideal.space
    pivots = s.pivots
    keep = [c for c in range(a.dim) if c not in set(pivots)]
    q = len(keep)

    def project(v: Sequence) -> Vector:
        w = list(v)
        for row, p in zip(s.basis, pivots):
            x = w[p]
            if x:
                w = [y - x * r for y, r in zip(w, row)]
        return tuple(w[c] for c in keep)

    t = [[project(a.table[keep[i]][keep[j]]) for j in range(q)] for i in range(q)]
    qa = _with_unit(t, label or f"quot({a.label})")
    cols = [project(a.basis_vector(c)) for c in range(a.dim)]
    matrix = la.transpose(cols, cols=q) if a.dim else tuple(() for _ in range(q))
    return qa, Morphism(a, qa, matrix)


def morphism_kernel(phi: Morphism) -> Subspace:
    return la.kernel(phi.matrix, cols=phi.source.dim)


def radical(a: Algebra) -> Subspace:
    """Jacobson radical by the trace criterion, evaluated in the unitization.

    ``J = {v in A : tr L_{v x} = 0 for every basis x of A#}``.
    """
    n = a.dim
    u = unitize(a)
    traces = [sum((u.table[k][j][j] for j in range(n + 1)), ZERO) for k in range(n + 1)]
    rows = []
    for t in range(n + 1):
        rows.append([sum((c * traces[k] for k, c in u.products[i][t]), ZERO) for i in range(n)])
    return la.kernel(rows, cols=n)


def is_semisimple(a: Algebra) -> bool:
    return radical(a).dim == 0


# ---------------------------------------------------------------------------
# canonical maps for Lau products and tensor products


def lau_projection_second(a: Algebra, b: Algebra, product: Algebra) -> Morphism:
    n1, n2 = a.dim, b.dim
    m = [[ONE if c == n1 + r else ZERO for c in range(n1 + n2)] for r in range(n2)]
    return Morphism(product, b, m)


def lau_injection_second(a: Algebra, b: Algebra, product: Algebra) -> Morphism:
    n1, n2 = a.dim, b.dim
    m = [[ONE if r == n1 + c else ZERO for c in range(n2)] for r in range(n1 + n2)]
    return Morphism(b, product, m)


def lau_projection_first(a: Algebra, b: Algebra, product: Algebra) -> Morphism:
    n1, n2 = a.dim, b.dim
    m = [[ONE if c == r else ZERO for c in range(n1 + n2)] for r in range(n1)]
    return Morphism(product, a, m)


def lau_injection_first(a: Algebra, b: Algebra, product: Algebra) -> Morphism:
    n1, n2 = a.dim, b.dim
    m = [[ONE if r == c else ZERO for c in range(n1)] for r in range(n1 + n2)]
    return Morphism(a, product, m)


def tensor_slice_retraction(a: Algebra, b: Algebra, product: Algebra, phi_b: Sequence) -> tuple[Morphism, Morphism]:
    """``x (x) y -> phi_b(y) x`` and ``x -> x (x) 1`` for unital ``b``."""
    ub = find_unit(b)
    if ub is None:
        raise AlgebraError("second factor must be unital")
    n1, n2 = a.dim, b.dim
    lam = [[ZERO] * (n1 * n2) for _ in range(n1)]
    gam = [[ZERO] * n1 for _ in range(n1 * n2)]
    for i in range(n1):
        for j in range(n2):
            lam[i][i * n2 + j] = la.to_fraction(phi_b[j])
            gam[i * n2 + j][i] = ub[j]
    return Morphism(product, a, lam), Morphism(a, product, gam)
