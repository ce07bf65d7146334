"""Independent reference computations built on sympy.

Each oracle writes down the defining identity directly (no shared code
with the package's solvers) and measures the solution space with sympy's
exact rank.
"""

from __future__ import annotations

import itertools

import sympy as sp


def table(a):
    """Structure constants as nested lists of sympy Rationals."""
    n = a.dim
    return [[[sp.Rational(a.table[i][j][k].numerator, a.table[i][j][k].denominator)
              for k in range(n)] for j in range(n)] for i in range(n)]


def _prod(c, x, y):
    n = len(c)
    return [sum(x[i] * y[j] * c[i][j][k] for i in range(n) for j in range(n)) for k in range(n)]


def _basis(n):
    return [[sp.Integer(int(i == k)) for k in range(n)] for i in range(n)]


def _dim_solutions(equations, unknowns) -> int:
    if not unknowns:
        return 0
    if not equations:
        return len(unknowns)
    m, _ = sp.linear_eq_to_matrix(equations, unknowns)
    return len(unknowns) - m.rank()


def derivation_dim(a) -> int:
    """D(ab) = D(a).b + a.D(b), tested against every basis element x."""
    c, n = table(a), a.dim
    e = _basis(n)
    M = sp.Matrix(n, n, lambda i, j: sp.Symbol(f"m{i}_{j}"))

    def pair(i, v):  # <D(e_i), v>
        return sum(M[i, k] * v[k] for k in range(n))

    eqs = []
    for i, j, x in itertools.product(range(n), repeat=3):
        ab = _prod(c, e[i], e[j])
        lhs = sum(ab[m] * pair(m, e[x]) for m in range(n))
        # <D(a).b, x> = <D(a), b x>;  <a.D(b), x> = <D(b), x a>
        rhs = pair(i, _prod(c, e[j], e[x])) + pair(j, _prod(c, e[x], e[i]))
        eqs.append(sp.expand(lhs - rhs))
    return _dim_solutions([q for q in eqs if q != 0], list(M))


def inner_dim(a) -> int:
    """Rank of F -> (x, y) -> F(xy - yx)."""
    c, n = table(a), a.dim
    e = _basis(n)
    rows = []
    for k in range(n):  # image of the k-th dual basis functional
        rows.append([_prod(c, e[i], e[j])[k] - _prod(c, e[j], e[i])[k]
                     for i in range(n) for j in range(n)])
    return sp.Matrix(rows).rank() if n else 0


def cyclic_dim(a) -> int:
    """Derivations with <D(a), b> + <D(b), a> = 0."""
    c, n = table(a), a.dim
    e = _basis(n)
    M = sp.Matrix(n, n, lambda i, j: sp.Symbol(f"m{i}_{j}"))
    eqs = []
    for i, j, x in itertools.product(range(n), repeat=3):
        ab = _prod(c, e[i], e[j])
        lhs = sum(ab[m] * M[m, x] for m in range(n))
        bx, xa = _prod(c, e[j], e[x]), _prod(c, e[x], e[i])
        rhs = sum(M[i, m] * bx[m] + M[j, m] * xa[m] for m in range(n))
        eqs.append(sp.expand(lhs - rhs))
    eqs += [M[i, j] + M[j, i] for i in range(n) for j in range(i, n)]
    return _dim_solutions([q for q in eqs if q != 0], list(M))


def point_derivation_dim(a, phi) -> int:
    c, n = table(a), a.dim
    e = _basis(n)
    phi = [sp.Rational(x.numerator, x.denominator) for x in phi]
    d = sp.symbols(f"d0:{n}") if n else ()
    eqs = []
    for i, j in itertools.product(range(n), repeat=2):
        ab = _prod(c, e[i], e[j])
        eqs.append(sp.expand(sum(ab[k] * d[k] for k in range(n)) - d[i] * phi[j] - phi[i] * d[j]))
    return _dim_solutions([q for q in eqs if q != 0], list(d))


def characters(a):
    """All complex solutions of phi(e_i e_j) = phi_i phi_j, via a Groebner-backed solve."""
    c, n = table(a), a.dim
    x = sp.symbols(f"x0:{n}")
    eqs = [sum(c[i][j][k] * x[k] for k in range(n)) - x[i] * x[j]
           for i in range(n) for j in range(n)]
    sols = sp.solve([q for q in eqs if q != 0], x, dict=True)
    out = set()
    for s in sols:
        v = tuple(sp.simplify(s.get(xi, xi)) for xi in x)
        if any(not vi.is_number for vi in v):
            raise ValueError("positive-dimensional solution set")
        if any(vi != 0 for vi in v):
            out.add(v)
    return out


def is_associative(a) -> bool:
    c, n = table(a), a.dim
    e = _basis(n)
    for i, j, k in itertools.product(range(n), repeat=3):
        if _prod(c, _prod(c, e[i], e[j]), e[k]) != _prod(c, e[i], _prod(c, e[j], e[k])):
            return False
    return True
