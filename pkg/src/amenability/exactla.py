"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`. Matrices are plain row sequences
(tuples of tuples on output). Elimination is done fraction-free on integer
rows stored sparsely as ``{column: int}`` dicts, and only normalised to
fractions at the end, which keeps the big derivation systems tractable.

A second, independent kernel routine (:func:`modular_kernel`) works modulo
word-sized primes with numpy and certifies its answer exactly over the
rationals. The two routines share no elimination code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence

import numpy as np

Vector = tuple  # tuple[Fraction, ...]
SparseRow = dict  # dict[int, Fraction | int]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' strings")
    return Fraction(x)


def vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def format_rational(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    q = to_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise ValueError(f"rational must be a string or integer, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"rational must be a string or integer, got {s!r}")
    return Fraction(s.strip())


# ---------------------------------------------------------------------------
# fraction-free sparse echelon


def _integer_row(row: SparseRow) -> dict:
    """Scale a rational sparse row to a primitive integer row."""
    entries = {c: to_fraction(v) for c, v in row.items() if v != 0}
    if not entries:
        return {}
    den = reduce(math.lcm, (v.denominator for v in entries.values()), 1)
    out = {c: v.numerator * (den // v.denominator) for c, v in entries.items()}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


class _Echelon:
    """Incrementally maintained reduced echelon basis over the integers.

    Every stored row is primitive, has a positive entry at its pivot and a
    zero in every other pivot column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    def _reduce(self, row: dict) -> dict:
        hits = [c for c in row if c in self.rows]
        if not hits:
            return row
        for c in hits:
            v = row.get(c)
            if not v:
                continue
            prow = self.rows[c]
            p = prow[c]
            g = math.gcd(p, v)
            mr, mp = p // g, v // g
            if mr != 1:
                row = {k: x * mr for k, x in row.items()}
            for k, x in prow.items():
                y = row.get(k, 0) - mp * x
                if y:
                    row[k] = y
                else:
                    row.pop(k, None)
        return _primitive(row) if row else row

    def add(self, row: dict) -> bool:
        """Insert an integer row; return True if the rank grew."""
        if len(self.rows) == self.ncols:
            return False
        row = self._reduce(row)
        if not row:
            return False
        piv = min(row)
        if row[piv] < 0:
            row = {k: -x for k, x in row.items()}
        for c, other in list(self.rows.items()):
            v = other.get(piv)
            if not v:
                continue
            p = row[piv]
            g = math.gcd(p, v)
            mo, mr = p // g, v // g
            new = {k: x * mo for k, x in other.items()} if mo != 1 else dict(other)
            for k, x in row.items():
                y = new.get(k, 0) - mr * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            self.rows[c] = _primitive(new)
        self.rows[piv] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduced_rows(self) -> list[Vector]:
        out = []
        for c in sorted(self.rows):
            row = self.rows[c]
            p = row[c]
            dense = [Fraction(0)] * self.ncols
            for k, x in row.items():
                dense[k] = Fraction(x, p)
            out.append(tuple(dense))
        return out

    def kernel_basis(self) -> list[Vector]:
        pivots = self.rows
        free = [c for c in range(self.ncols) if c not in pivots]
        # column f of the reduced matrix, read off pivot rows
        by_free: dict[int, list] = {f: [] for f in free}
        for c, row in pivots.items():
            p = row[c]
            for k, x in row.items():
                if k != c:
                    by_free[k].append((c, Fraction(-x, p)))
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for c, x in by_free[f]:
                v[c] = x
            basis.append(tuple(v))
        return basis


def _echelon_from(rows: Iterable[SparseRow], ncols: int) -> _Echelon:
    ech = _Echelon(ncols)
    for row in rows:
        irow = _integer_row(row)
        if irow:
            ech.add(irow)
    return ech


def _dense_to_sparse(rows: Sequence[Sequence]) -> list[SparseRow]:
    return [{j: v for j, v in enumerate(r) if v != 0} for r in rows]


def _ncols(m: Sequence[Sequence], cols: Optional[int]) -> int:
    if cols is not None:
        return cols
    if not m:
        raise ValueError("cannot infer the column count of an empty matrix; pass cols=")
    return len(m[0])


def _check_rect(m: Sequence[Sequence], ncols: int) -> None:
    for r in m:
        if len(r) != ncols:
            raise ValueError("ragged matrix")


# ---------------------------------------------------------------------------
# public dense API


def rref(m: Sequence[Sequence], cols: Optional[int] = None):
    """Reduced row echelon form.

    Returns ``(reduced, pivots, rank)``; ``reduced`` keeps the shape of ``m``
    with zero rows at the bottom.
    """
    ncols = _ncols(m, cols)
    _check_rect(m, ncols)
    ech = _echelon_from(_dense_to_sparse(m), ncols)
    reduced = ech.reduced_rows()
    zero = tuple(Fraction(0) for _ in range(ncols))
    reduced.extend(zero for _ in range(len(m) - len(reduced)))
    return tuple(reduced), ech.pivots(), ech.rank


def rank(m: Sequence[Sequence], cols: Optional[int] = None) -> int:
    ncols = _ncols(m, cols)
    _check_rect(m, ncols)
    return _echelon_from(_dense_to_sparse(m), ncols).rank


def kernel(m: Sequence[Sequence], cols: Optional[int] = None) -> "Subspace":
    """``{v : m v = 0}``."""
    ncols = _ncols(m, cols)
    _check_rect(m, ncols)
    return sparse_kernel(_dense_to_sparse(m), ncols)


def sparse_kernel(rows: Iterable[SparseRow], ncols: int) -> "Subspace":
    ech = _echelon_from(rows, ncols)
    return _from_rref(ncols, _rref_of_vectors(ech.kernel_basis(), ncols))


def solve(m: Sequence[Sequence], b: Sequence, cols: Optional[int] = None) -> Optional[Vector]:
    """Some exact solution of ``m x = b``, or ``None`` if there is none."""
    ncols = _ncols(m, cols)
    _check_rect(m, ncols)
    if len(b) != len(m):
        raise ValueError("right-hand side length does not match the row count")
    aug = [list(r) + [b[i]] for i, r in enumerate(m)]
    ech = _echelon_from(_dense_to_sparse(aug), ncols + 1)
    if ncols in ech.rows:
        return None
    x = [Fraction(0)] * ncols
    for c, row in ech.rows.items():
        x[c] = Fraction(row.get(ncols, 0), row[c])
    return tuple(x)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = list(zip(*b)) if b else []
    return tuple(tuple(sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in bt) for r in a)


def matvec(a: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(sum((x * y for x, y in zip(r, v)), Fraction(0)) for r in a)


def identity(n: int) -> tuple:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence], cols: Optional[int] = None) -> tuple:
    ncols = _ncols(m, cols) if m or cols is not None else 0
    return tuple(tuple(m[i][j] for i in range(len(m))) for j in range(ncols))


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim held by its unique RREF basis."""

    ambient_dim: int
    basis: tuple  # tuple[Vector, ...], RREF, no zero rows

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(i for i, x in enumerate(v) if x != 0) for v in self.basis)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, identity(n))

    def __contains__(self, v) -> bool:
        return is_member(self, v)

    def __repr__(self) -> str:
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def _rref_of_vectors(vectors: Sequence[Sequence], ncols: int) -> tuple:
    ech = _echelon_from(_dense_to_sparse(vectors), ncols)
    return tuple(ech.reduced_rows())


def _from_rref(ncols: int, rows: tuple) -> Subspace:
    return Subspace(ncols, rows)


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    vectors = [vector(v) for v in vectors]
    for v in vectors:
        if len(v) != ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    return Subspace(ambient_dim, _rref_of_vectors(vectors, ambient_dim))


def _check_ambient(s: Subspace, t: Subspace) -> None:
    if s.ambient_dim != t.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {s.ambient_dim} vs {t.ambient_dim}")


def is_member(s: Subspace, v: Sequence) -> bool:
    if len(v) != s.ambient_dim:
        raise ValueError("vector length does not match the ambient dimension")
    w = list(vector(v))
    for row, p in zip(s.basis, s.pivots):
        x = w[p]
        if x:
            w = [a - x * b for a, b in zip(w, row)]
    return not any(w)


def contains(outer: Subspace, inner: Subspace) -> bool:
    _check_ambient(outer, inner)
    if inner.dim > outer.dim:
        return False
    return all(is_member(outer, v) for v in inner.basis)


def equal(s: Subspace, t: Subspace) -> bool:
    _check_ambient(s, t)
    return s.basis == t.basis


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    return span(s.basis + t.basis, s.ambient_dim)


def annihilator(s: Subspace) -> Subspace:
    """Vectors orthogonal to ``s`` under the standard pairing."""
    return kernel(s.basis, cols=s.ambient_dim)


def intersect(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    return kernel(annihilator(s).basis + annihilator(t).basis, cols=s.ambient_dim)


def dim(s: Subspace) -> int:
    return s.dim


# ---------------------------------------------------------------------------
# multi-modular kernel with exact certification

_PRIMES = (2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543,
           2147483497, 2147483489, 2147483477, 2147483423, 2147483399, 2147483353)


class ModularKernelError(RuntimeError):
    pass


def _rref_mod_p(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _reconstruct(u: int, m: int) -> Optional[Fraction]:
    """Rational reconstruction of ``u mod m`` with |num|, den <= sqrt(m/2)."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, u % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def modular_kernel(rows: Sequence[SparseRow], ncols: int) -> Subspace:
    """Kernel computed modulo primes, lifted, and verified exactly.

    The modular rank never exceeds the rational rank, so a lifted family of
    ``ncols - rank_p`` independent vectors that exactly annihilates every
    row is the whole kernel.
    """
    int_rows = [r for r in (_integer_row(row) for row in rows) if r]
    if not int_rows:
        return Subspace.full(ncols)
    modulus = 1
    residues: Optional[np.ndarray] = None
    shape = None
    for p in _PRIMES:
        a = np.zeros((len(int_rows), ncols), dtype=np.int64)
        for i, row in enumerate(int_rows):
            for c, v in row.items():
                a[i, c] = v % p
        red, pivots = _rref_mod_p(a, p)
        free = [c for c in range(ncols) if c not in set(pivots)]
        kb = np.zeros((len(free), ncols), dtype=np.int64)
        for t, f in enumerate(free):
            kb[t, f] = 1
            for i, c in enumerate(pivots):
                kb[t, c] = (-red[i, f]) % p
        if shape != (tuple(pivots), kb.shape) or residues is None:
            # unlucky prime in the previous round, or first round: restart CRT
            shape = (tuple(pivots), kb.shape)
            residues = kb.astype(object)
            modulus = p
        else:
            inv = pow(modulus, -1, p)
            kb_o = kb.astype(object)
            residues = residues + modulus * (((kb_o - residues) * inv) % p)
            modulus *= p
        basis = []
        ok = True
        for t in range(residues.shape[0]):
            vec = []
            for c in range(ncols):
                q = _reconstruct(int(residues[t, c]), modulus)
                if q is None:
                    ok = False
                    break
                vec.append(q)
            if not ok:
                break
            basis.append(tuple(vec))
        if ok and _annihilates(int_rows, basis):
            return Subspace(ncols, _rref_of_vectors(basis, ncols))
    raise ModularKernelError("multi-modular kernel did not certify; enlarge the prime list")


def _annihilates(rows: Sequence[dict], basis: Sequence[Vector]) -> bool:
    for v in basis:
        den = reduce(math.lcm, (x.denominator for x in v), 1)
        w = [int(x * den) for x in v]
        for row in rows:
            if sum(x * w[c] for c, x in row.items()):
                return False
    return True


# ---------------------------------------------------------------------------
# polynomials


def charpoly(m: Sequence[Sequence]) -> tuple:
    """Characteristic polynomial ``det(x I - m)``, coefficients low degree first.

    Faddeev-LeVerrier on the integer matrix ``d m`` (``d`` clears
    denominators), where every division is exact; then rescaled.
    """
    n = len(m)
    rows = [[to_fraction(x) for x in r] for r in m]
    d = reduce(math.lcm, (x.denominator for r in rows for x in r), 1)
    a = [[int(x * d) for x in r] for r in rows]
    c = [0] * (n + 1)
    c[n] = 1
    mk = [[0] * n for _ in range(n)]
    at = list(zip(*a)) if n else []
    for k in range(1, n + 1):
        cols = list(zip(*mk))
        prod = [[sum(x * y for x, y in zip(a[i], cols[j])) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c[n - k + 1]
        mk = prod
        tr = sum(sum(x * y for x, y in zip(at[i], mk[i])) for i in range(n))
        c[n - k] = -tr // k
    # det(xI - m) = d^-n det(d x I - d m)
    return tuple(Fraction(c[i] * d**i, d**n) for i in range(n + 1))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n > 10**12:
        from sympy import divisors
        return [int(d) for d in divisors(n)]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_roots(coeffs: Sequence) -> list[Fraction]:
    """Distinct rational roots (sorted), by the rational root theorem."""
    cs = [to_fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) <= 1:
        return []
    roots = set()
    if cs[0] == 0:
        roots.add(Fraction(0))
        while cs[0] == 0:
            cs.pop(0)
    if len(cs) > 1:
        den = reduce(math.lcm, (c.denominator for c in cs), 1)
        ints = [int(c * den) for c in cs]
        for q in _divisors(ints[-1]):
            for p in _divisors(ints[0]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand not in roots and poly_eval(cs, cand) == 0:
                        roots.add(cand)
    return sorted(roots)
