"""Independent sympy implementation of the M operators and E polynomials.

Written straight from the operator definitions with rational-function
arithmetic; shares no code with the package beyond converting results.
"""

from functools import lru_cache
from itertools import product as iproduct

import sympy

from helpers import Q, T

X = sympy.symbols("x1:5")


def s(i, f, n):
    a, b = X[i - 1], X[i]
    return f.subs({a: b, b: a}, simultaneous=True)


def H(i, f, n):
    a, b = X[i - 1], X[i]
    return sympy.cancel(T * f + (b - T * a) / (b - a) * (s(i, f, n) - f))


def H_inv(i, f, n):
    return sympy.expand((H(i, f, n) - (T - 1) * f) / T)


def omega(f, n):
    for i in range(1, n):
        f = s(i, f, n)
    return f.subs(X[n - 1], Q * X[n - 1])


def M(i, f, n):
    for j in range(i - 1, 0, -1):
        f = H_inv(j, f, n)
    f = omega(f, n)
    for j in range(n - 1, i - 1, -1):
        f = H(j, f, n)
    return sympy.expand(f)


def k_count(lam, i):
    n = len(lam)
    return sum(1 for j in range(i) if lam[j] >= lam[i]) + sum(1 for j in range(i + 1, n) if lam[j] > lam[i])


def xi(lam, i):
    n = len(lam)
    return Q ** lam[i - 1] * T ** (n - i - k_count(lam, i - 1))


def monomial(e):
    return sympy.Mul(*[X[j] ** a for j, a in enumerate(e)])


@lru_cache(maxsize=None)
def E(lam):
    """Monic joint eigenvector as a dict exponent -> sympy coefficient."""
    n, d = len(lam), sum(lam)
    basis = [e for e in iproduct(range(d + 1), repeat=n) if sum(e) == d]
    unknowns = {e: (sympy.Integer(1) if e == tuple(lam) else sympy.Symbol(f"c{k}")) for k, e in enumerate(basis)}
    f = sum(c * monomial(e) for e, c in unknowns.items())
    eqs = []
    for i in range(1, n + 1):
        g = sympy.expand(M(i, f, n) - xi(lam, i) * f)
        poly = sympy.Poly(g, *X[:n])
        eqs.extend(poly.coeffs())
    syms = [c for c in unknowns.values() if isinstance(c, sympy.Symbol)]
    if not syms:
        assert all(sympy.simplify(e) == 0 for e in eqs)
        return {tuple(lam): sympy.Integer(1)}
    sol = sympy.solve(eqs, syms, dict=True)
    assert len(sol) == 1
    sol = sol[0]
    return {e: sympy.factor(c.subs(sol)) for e, c in unknowns.items() if sympy.simplify(c.subs(sol)) != 0}
