"""Characters: nonzero multiplicative functionals ``phi(e_i e_j) = phi_i phi_j``.

Discovery only finds rational-valued characters. Whether the rational list
is everything over C is decided separately: characters factor through the
commutative quotient ``B = A/[A,A]`` and then through ``B/rad(B)``, a
product of number fields, whose complex characters number exactly
``dim B/rad(B)``. The list is complete iff its length reaches that count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactla as la
from .algebra import (
    Algebra,
    _multiplicative,
    commutator_ideal,
    left_mult_matrix,
    quotient,
    radical,
)

DEFAULT_CAP = 10**6


class CharacterSearchOverflow(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"character search exceeded the cap of {cap} visited nodes")
        self.cap = cap


class InvalidCharacter(ValueError):
    def __init__(self, index: int, reason: str = "not multiplicative"):
        super().__init__(f"declared character {index} is {reason}")
        self.index = index


@dataclass(frozen=True)
class CharacterSet:
    characters: tuple  # sorted tuple of value vectors
    complete: bool

    def __len__(self) -> int:
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    @property
    def nonempty(self):
        """True / False, or None when no rational character was found but the list may be incomplete."""
        if self.characters:
            return True
        return False if self.complete else None


def is_character(a: Algebra, phi: Sequence) -> bool:
    """Membership in Delta_0(A): multiplicative, the zero functional included."""
    if len(phi) != a.dim:
        raise ValueError(f"functional must have length {a.dim}")
    return _multiplicative(a, la.vector(phi))


def _search(b: Algebra, candidates: list[list[Fraction]], cap: int) -> list[tuple]:
    """Joint left-eigenspace descent: ``phi L_t = phi(e_t) phi`` for every ``t``.

    Each node carries a basis of the functionals still compatible with the
    values chosen so far; a branch dies as soon as that space is zero, so
    at most ``dim`` branches survive each level.
    """
    n = b.dim
    mats = [left_mult_matrix(b, b.basis_vector(t)) for t in range(n)]
    found = []
    visited = 0
    values = [Fraction(0)] * n

    def extend(t: int, basis: list):
        nonlocal visited
        if t == n:
            if any(values) and _multiplicative(b, values):
                found.append(tuple(values))
            return
        shifted = la.matmul(basis, mats[t])
        for val in candidates[t]:
            visited += 1
            if visited > cap:
                raise CharacterSearchOverflow(cap)
            # coefficient vectors c with c (B L_t - val B) = 0
            m = [[shifted[r][j] - val * basis[r][j] for r in range(len(basis))] for j in range(n)]
            ker = la.kernel(m, cols=len(basis))
            if ker.dim == 0:
                continue
            values[t] = val
            extend(t + 1, [la.matvec(la.transpose(basis, cols=n), c) for c in ker.basis])
        values[t] = Fraction(0)

    if n:
        extend(0, [list(v) for v in la.identity(n)])
    return found


def find_rational_characters(a: Algebra, cap: int = DEFAULT_CAP) -> CharacterSet:
    """Every character of ``a`` with rational values, plus a completeness flag."""
    b, pi = quotient(a, commutator_ideal(a))
    candidates = []
    for t in range(b.dim):
        lm = left_mult_matrix(b, b.basis_vector(t))
        candidates.append(la.rational_roots(la.charpoly(lm)))
    chars_b = _search(b, candidates, cap)
    lifted = sorted({tuple(sum((phi[t] * pi.matrix[t][i] for t in range(b.dim)), Fraction(0))
                           for i in range(a.dim)) for phi in chars_b})
    complex_count = b.dim - radical(b).dim
    return CharacterSet(tuple(lifted), len(lifted) == complex_count)


def merge_declared(a: Algebra, found: CharacterSet) -> CharacterSet:
    declared = a.declared_characters or ()
    for idx, phi in enumerate(declared):
        if not any(phi):
            raise InvalidCharacter(idx, "zero")
        if not is_character(a, phi):
            raise InvalidCharacter(idx)
    merged = tuple(sorted(set(found.characters) | set(declared)))
    complete = found.complete or (a.declared_characters is not None and a.characters_complete)
    return CharacterSet(merged, complete)


def declared_only(a: Algebra) -> CharacterSet:
    return merge_declared(a, CharacterSet((), False))


def characters_of(a: Algebra, cap: int = DEFAULT_CAP) -> CharacterSet:
    return merge_declared(a, find_rational_characters(a, cap))
