"""Derivation spaces into the dual module and the amenability classification.

A linear map ``D: A -> A*`` is stored as the matrix ``M[i][j] = <D(e_i), e_j>``
and flattened row-major into ``Q^(n*n)``. The module actions are
``<F.a, x> = F(a x)`` and ``<a.F, x> = F(x a)``, so pairing
``D(e_i e_j) = D(e_i).e_j + e_i.D(e_j)`` with ``e_k`` gives

    sum_m c[i][j][m] M[m][k] = sum_m c[j][k][m] M[i][m] + sum_m c[k][i][m] M[j][m].

Quasi-additive functionals satisfy the same identity written as
``p(ax (x) b) = p(a (x) xb) + p(x (x) ba)``. They are assembled separately
and solved with :func:`exactla.modular_kernel`, so the two sides of every
classification are computed by unrelated code paths and cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import exactla as la
from .algebra import Algebra, find_unit, is_commutative, radical, square
from .characters import CharacterSet, characters_of, is_character
from .exactla import Subspace
from .logic import and3

FIELD = "Q"


class NotInDeltaZero(ValueError):
    pass


# ---------------------------------------------------------------------------
# derivation side


def _derivation_rows(a: Algebra):
    n = a.dim
    t = a.products
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row: dict = {}
                for m, c in t[i][j]:
                    row[m * n + k] = row.get(m * n + k, 0) + c
                for m, c in t[j][k]:
                    row[i * n + m] = row.get(i * n + m, 0) - c
                for m, c in t[k][i]:
                    row[j * n + m] = row.get(j * n + m, 0) - c
                yield row


def derivation_space(a: Algebra) -> Subspace:
    """All derivations ``A -> A*`` as flattened matrices."""
    return la.sparse_kernel(_derivation_rows(a), a.dim * a.dim)


def _inner_generators(a: Algebra) -> list[tuple]:
    n = a.dim
    gens = []
    for k in range(n):
        gens.append(tuple(a.table[i][j][k] - a.table[j][i][k] for i in range(n) for j in range(n)))
    return gens


def inner_space(a: Algebra) -> Subspace:
    """Image of ``F -> ad_F`` with ``<ad_F(e_i), e_j> = F(e_i e_j - e_j e_i)``."""
    return la.span(_inner_generators(a), a.dim * a.dim)


def antisymmetric_space(n: int) -> Subspace:
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [Fraction(0)] * (n * n)
            v[i * n + j] = Fraction(1)
            v[j * n + i] = Fraction(-1)
            basis.append(tuple(v))
    return Subspace(n * n, tuple(basis))


def cyclic_derivation_space(a: Algebra, der: Optional[Subspace] = None) -> Subspace:
    """Derivations with ``<D(a), b> + <D(b), a> = 0``."""
    if der is None:
        der = derivation_space(a)
    return la.intersect(der, antisymmetric_space(a.dim))


def trace_functionals(a: Algebra) -> Subspace:
    """``{F : F(ab) = F(ba)}``; the kernel of ``F -> ad_F``."""
    n = a.dim
    rows = [[a.table[i][j][k] - a.table[j][i][k] for k in range(n)]
            for i in range(n) for j in range(i + 1, n)]
    return la.kernel(rows, cols=n)


# ---------------------------------------------------------------------------
# quasi-additive side


def _quasi_additive_rows(a: Algebra) -> list[dict]:
    n = a.dim
    tab = a.table
    rows = []
    for ia in range(n):
        for ix in range(n):
            ax = tab[ia][ix]
            for ib in range(n):
                xb = tab[ix][ib]
                ba = tab[ib][ia]
                row: dict = {}
                # p(ax (x) b) - p(a (x) xb) - p(x (x) ba) = 0
                for m in range(n):
                    if ax[m]:
                        row[m * n + ib] = row.get(m * n + ib, 0) + ax[m]
                    if xb[m]:
                        row[ia * n + m] = row.get(ia * n + m, 0) - xb[m]
                    if ba[m]:
                        row[ix * n + m] = row.get(ix * n + m, 0) - ba[m]
                rows.append(row)
    return rows


def _symmetry_rows(n: int) -> list[dict]:
    # p(a (x) a) = 0 for all a  <=>  p[i][i] = 0 and p[i][j] + p[j][i] = 0
    rows = []
    for i in range(n):
        rows.append({i * n + i: 1})
        for j in range(i + 1, n):
            rows.append({i * n + j: 1, j * n + i: 1})
    return rows


def quasi_additive_space(a: Algebra) -> Subspace:
    return la.modular_kernel(_quasi_additive_rows(a), a.dim * a.dim)


def inner_qa_space(a: Algebra) -> Subspace:
    """Functionals ``p(a (x) b) = F(ab - ba)``, spanned over the dual basis ``F = e_k*``."""
    n = a.dim
    gens = []
    for k in range(n):
        p = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                p[i][j] = a.table[i][j][k] - a.table[j][i][k]
        gens.append(tuple(x for row in p for x in row))
    return la.span(gens, n * n)


def cyclic_qa_space(a: Algebra) -> Subspace:
    return la.modular_kernel(_quasi_additive_rows(a) + _symmetry_rows(a.dim), a.dim * a.dim)


# ---------------------------------------------------------------------------
# point derivations


def point_derivation_space(a: Algebra, phi: Sequence) -> Subspace:
    """Functionals ``d`` with ``d(ab) = d(a) phi(b) + phi(a) d(b)``."""
    phi = la.vector(phi)
    if len(phi) != a.dim or not is_character(a, phi):
        raise NotInDeltaZero("phi is not a character or zero")
    n = a.dim
    rows = []
    for i in range(n):
        for j in range(n):
            row = {k: c for k, c in a.products[i][j]}
            row[j] = row.get(j, 0) - phi[i]
            row[i] = row.get(i, 0) - phi[j]
            rows.append(row)
    return la.sparse_kernel(rows, n)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class AmenabilityReport:
    """Dimensions of every computed space and the resulting verdicts.

    ``point_amenable`` and ``zero_point_amenable`` are ``None`` when they
    hinge on characters that rational search could not rule out.
    """

    label: str
    dim: int
    derivation_dim: int
    inner_dim: int
    cyclic_dim: int
    quasi_additive_dim: int
    inner_qa_dim: int
    cyclic_qa_dim: int
    characters: tuple
    point_derivation_dims: tuple
    zero_point_derivation_dim: int
    square_dim: int
    radical_dim: int
    weakly_amenable: bool
    cyclically_amenable: bool
    cyclically_weakly_amenable: bool
    point_amenable: Optional[bool]
    zero_point_amenable: Optional[bool]
    essential: bool
    semisimple: bool
    commutative: bool
    unital: bool
    character_set_complete: bool
    qa_consistent: bool
    ground_field: str = FIELD
    findings: tuple = ()

    @property
    def verdicts(self) -> tuple:
        return (self.weakly_amenable, self.cyclically_amenable, self.cyclically_weakly_amenable,
                self.point_amenable, self.zero_point_amenable)

    @property
    def characters_nonempty(self) -> Optional[bool]:
        return CharacterSet(self.characters, self.character_set_complete).nonempty


def classify(a: Algebra, chars: Optional[CharacterSet] = None) -> AmenabilityReport:
    if chars is None:
        chars = characters_of(a)
    n = a.dim
    der = derivation_space(a)
    inn = inner_space(a)
    anti = antisymmetric_space(n)
    cyc = cyclic_derivation_space(a, der)

    wa = la.equal(der, inn)
    ca = la.contains(inn, cyc)
    cwa = la.contains(anti, der)

    qa = quasi_additive_space(a)
    iqa = inner_qa_space(a)
    cqa = cyclic_qa_space(a)
    qa_consistent = (
        la.equal(qa, der)
        and la.equal(iqa, inn)
        and la.equal(cqa, cyc)
        and wa == la.equal(qa, iqa)
        and ca == la.contains(iqa, cqa)
        and cwa == la.contains(anti, qa)
        and inn.dim == n - trace_functionals(a).dim
    )

    pd = tuple((phi, point_derivation_space(a, phi).dim) for phi in chars.characters)
    pd0 = point_derivation_space(a, (Fraction(0),) * n).dim
    if any(d for _, d in pd):
        pa: Optional[bool] = False
    else:
        pa = True if chars.complete else None
    zpa = and3(pa, pd0 == 0)

    sq = square(a).dim
    rad = radical(a).dim
    findings = []
    if not qa_consistent:
        findings.append("quasi-additive and derivation computations disagree")
    if chars.characters and chars.complete:
        if cwa != zpa:
            findings.append("CWA differs from 0-point amenability despite a nonempty character space")
        if zpa != and3(pa, sq == n):
            findings.append("0-point amenability differs from point amenable and essential")
    if wa != (ca and cwa):
        findings.append("WA differs from CA and CWA")

    return AmenabilityReport(
        label=a.label,
        dim=n,
        derivation_dim=der.dim,
        inner_dim=inn.dim,
        cyclic_dim=cyc.dim,
        quasi_additive_dim=qa.dim,
        inner_qa_dim=iqa.dim,
        cyclic_qa_dim=cqa.dim,
        characters=chars.characters,
        point_derivation_dims=tuple(d for _, d in pd),
        zero_point_derivation_dim=pd0,
        square_dim=sq,
        radical_dim=rad,
        weakly_amenable=wa,
        cyclically_amenable=ca,
        cyclically_weakly_amenable=cwa,
        point_amenable=pa,
        zero_point_amenable=zpa,
        essential=sq == n,
        semisimple=rad == 0,
        commutative=is_commutative(a),
        unital=find_unit(a) is not None,
        character_set_complete=chars.complete,
        qa_consistent=qa_consistent,
        findings=tuple(findings),
    )

