from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from amenability import exactla as la

small_int = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_int, min_size=c, max_size=c), min_size=r, max_size=r)))


def square_matrices(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n))


def _frac(x) -> Fraction:
    q = sp.Rational(x)
    return Fraction(int(q.p), int(q.q))


class TestRationals:
    def test_format(self):
        assert la.format_rational(Fraction(3, 1)) == "3"
        assert la.format_rational(Fraction(-6, 4)) == "-3/2"

    def test_floats_rejected(self):
        with pytest.raises((TypeError, ValueError)):
            la.to_fraction(0.5)
        with pytest.raises(ValueError):
            la.parse_rational(0.5)

    @given(st.fractions())
    def test_round_trip(self, q):
        assert la.parse_rational(la.format_rational(q)) == q


class TestElimination:
    @given(matrices())
    def test_rank_matches_sympy(self, m):
        assert la.rank(m) == sp.Matrix(m).rank()

    @given(matrices())
    def test_rref_matches_sympy(self, m):
        reduced, pivots, r = la.rref(m)
        ref, ref_piv = sp.Matrix(m).rref()
        assert tuple(pivots) == tuple(ref_piv)
        assert r == len(ref_piv)
        for i in range(r):
            assert [_frac(x) for x in ref.row(i)] == list(reduced[i])

    @given(matrices())
    def test_kernel_annihilates_and_has_right_dim(self, m):
        k = la.kernel(m)
        assert k.dim == len(m[0]) - sp.Matrix(m).rank()
        for v in k.basis:
            assert all(x == 0 for x in la.matvec(m, v))

    @settings(max_examples=60)
    @given(matrices(8, 7))
    def test_modular_kernel_agrees_with_exact(self, m):
        rows = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in m]
        assert la.modular_kernel(rows, len(m[0])) == la.kernel(m)

    def test_modular_kernel_large_entries(self):
        big = 10**30 + 7
        m = [[big, 1, 0], [0, Fraction(1, big), 1]]
        rows = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in m]
        assert la.modular_kernel(rows, 3) == la.kernel(m)

    @given(matrices(4, 4), st.lists(small_int, min_size=4, max_size=4))
    def test_solve(self, m, x):
        x = x[: len(m[0])]
        b = la.matvec(m, x)
        sol = la.solve(m, b)
        assert sol is not None and la.matvec(m, sol) == b

    def test_solve_inconsistent(self):
        assert la.solve([[1, 0], [1, 0]], [1, 2]) is None


class TestSubspaces:
    def test_canonical(self):
        s = la.span([[1, 1, 0], [0, 1, 1]], 3)
        t = la.span([[1, 2, 1], [1, 0, -1]], 3)
        assert s == t and la.equal(s, t)

    @given(st.lists(st.lists(small_int, min_size=4, max_size=4), max_size=3),
           st.lists(st.lists(small_int, min_size=4, max_size=4), max_size=3))
    def test_dimension_formula(self, u, v):
        s, t = la.span(u, 4), la.span(v, 4)
        total = la.subspace_sum(s, t)
        inter = la.intersect(s, t)
        assert total.dim + inter.dim == s.dim + t.dim
        assert la.contains(s, inter) and la.contains(t, inter)
        assert la.contains(total, s) and la.contains(total, t)

    @given(st.lists(st.lists(small_int, min_size=4, max_size=4), max_size=4))
    def test_annihilator(self, u):
        s = la.span(u, 4)
        ann = la.annihilator(s)
        assert ann.dim == 4 - s.dim
        for f in ann.basis:
            for v in s.basis:
                assert sum(a * b for a, b in zip(f, v)) == 0

    def test_membership(self):
        s = la.span([[1, 0, 1]], 3)
        assert (2, 0, 2) in s
        assert (1, 0, 0) not in s
        assert la.Subspace.zero(3).dim == 0 and la.Subspace.full(3).dim == 3


class TestPolynomials:
    @given(square_matrices())
    def test_charpoly_matches_sympy(self, m):
        x = sp.Symbol("x")
        ref = sp.Poly(sp.Matrix(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
        assert list(la.charpoly(m)) == [_frac(c) for c in ref]

    def test_charpoly_rational(self):
        m = [[Fraction(1, 2), 0], [0, Fraction(-1, 3)]]
        # (x - 1/2)(x + 1/3) = x^2 - x/6 - 1/6
        assert la.charpoly(m) == (Fraction(-1, 6), Fraction(-1, 6), 1)

    @given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=1, max_size=4),
           st.integers(-3, 3).filter(bool))
    def test_rational_roots_recovers_roots(self, roots, lead):
        x = sp.Symbol("x")
        poly = sp.Poly(lead * sp.prod([x - sp.Rational(r.numerator, r.denominator) for r in roots]), x)
        coeffs = [_frac(c) for c in poly.all_coeffs()[::-1]]
        assert la.rational_roots(coeffs) == sorted(set(roots))

    def test_irrational_roots_absent(self):
        assert la.rational_roots([-2, 0, 1]) == []
        assert la.rational_roots([0, -2, 0, 1]) == [0]
