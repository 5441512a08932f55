"""Reference implementations that share no code with the package.

The symbolic check works in sympy's polynomial ring over QQ or GF(p): elements
of K[x]/m^2 are polynomials truncated above degree 1, operators act through
coefficient extraction, and the identity is tested on fully generic x and y
(symbolic coefficients), so it does not lean on the basis-pair reduction.
"""

from __future__ import annotations

import itertools

import sympy as sp


def _truncate(expr, xs):
    poly = sp.Poly(sp.expand(expr), *xs)
    return sum(
        (c * sp.prod([x**e for x, e in zip(xs, monom)]) for monom, c in poly.terms() if sum(monom) <= 1),
        sp.Integer(0),
    )


def _coords(expr, xs):
    terms = sp.Poly(sp.expand(expr), *xs).as_dict()
    out = [terms.get(tuple(0 for _ in xs), 0)]
    for i in range(len(xs)):
        out.append(terms.get(tuple(1 if j == i else 0 for j in range(len(xs))), 0))
    return out


def _apply(M, expr, xs):
    c = _coords(expr, xs)
    basis = [sp.Integer(1)] + list(xs)
    return sum((sum((M[r][k] * c[k] for k in range(len(c))), sp.Integer(0)) * basis[r] for r in range(len(c))), sp.Integer(0))


def rb_identity_symbolic(matrix, lam, p: int | None = None) -> bool:
    """True iff P(x)P(y) = P(xP(y) + P(x)y + lam xy) for generic x, y in R.

    ``matrix`` entries are ints or Fractions (as sympy Rationals); ``p`` selects
    reduction modulo p.
    """
    d = len(matrix)
    n = d - 1
    xs = sp.symbols(f"x1:{n + 1}")
    a = sp.symbols(f"a0:{d}")
    b = sp.symbols(f"b0:{d}")
    M = [[sp.Rational(str(e)) for e in row] for row in matrix]
    lam = sp.Rational(str(lam))
    X = a[0] + sum(a[i + 1] * xs[i] for i in range(n))
    Y = b[0] + sum(b[i + 1] * xs[i] for i in range(n))
    PX, PY = _apply(M, X, xs), _apply(M, Y, xs)
    lhs = _truncate(PX * PY, xs)
    inner = _truncate(X * PY + PX * Y + lam * X * Y, xs)
    rhs = _apply(M, inner, xs)
    diff = sp.expand(lhs - rhs)
    if diff == 0:
        return True
    if p is None:
        return False
    gens = list(xs) + list(a) + list(b)
    poly = sp.Poly(diff, *gens)
    for c in poly.coeffs():
        num, den = sp.fraction(sp.Rational(c))
        if int(num) * pow(int(den), -1, p) % p:
            return False
    return True


def all_matrices(p: int, d: int):
    for entries in itertools.product(range(p), repeat=d * d):
        yield [list(entries[i * d:(i + 1) * d]) for i in range(d)]


def brute_rb_basis_pairs(matrix, lam, p: int) -> bool:
    """Identity on basis pairs with plain integer lists, written from scratch."""
    d = len(matrix)

    def mult(u, v):
        return [u[0] * v[0]] + [u[0] * v[k] + v[0] * u[k] for k in range(1, d)]

    def act(u):
        return [sum(matrix[r][k] * u[k] for k in range(d)) for r in range(d)]

    E = [[1 if k == i else 0 for k in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(d):
            pi, pj = act(E[i]), act(E[j])
            lhs = mult(pi, pj)
            arg = [s + t + lam * w for s, t, w in zip(mult(E[i], pj), mult(pi, E[j]), mult(E[i], E[j]))]
            rhs = act(arg)
            if any((u - v) % p for u, v in zip(lhs, rhs)):
                return False
    return True
