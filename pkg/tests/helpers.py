"""Shared strategies and independent oracles for the test suite."""

import sympy
from hypothesis import strategies as st

from nsmac import LPoly, QTRat
from nsmac.qt_field import QTPoly

Q, T = sympy.symbols("q t")


def to_sympy(r) -> sympy.Expr:
    r = QTRat(r) if not isinstance(r, QTRat) else r
    num = sum(c * Q**i * T**j for (i, j), c in r.num.terms.items())
    den = sum(c * Q**i * T**j for (i, j), c in r.den.terms.items())
    return sympy.Integer(num) / den if isinstance(num, int) else num / den


def from_sympy(expr) -> QTRat:
    num, den = sympy.fraction(sympy.together(sympy.expand(expr)))

    def conv(p):
        poly = sympy.Poly(sympy.expand(p), Q, T)
        return QTPoly({m: int(c) for m, c in poly.terms()})

    return QTRat(conv(num), conv(den))


def sympy_equal(r, expr) -> bool:
    return sympy.simplify(to_sympy(r) - expr) == 0


small_poly = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.integers(-3, 3),
    max_size=4,
).map(QTPoly)

nonzero_poly = small_poly.filter(bool)

qtrat = st.builds(QTRat, small_poly, nonzero_poly)
nonzero_qtrat = qtrat.filter(bool)


def laurent(n: int, lo: int = -2, hi: int = 2, max_terms: int = 4):
    coeff = st.one_of(st.integers(-3, 3).map(QTRat), qtrat)
    exps = st.tuples(*[st.integers(lo, hi) for _ in range(n)])
    return st.dictionaries(exps, coeff, max_size=max_terms).map(lambda d: LPoly(n, d))


def compositions_st(n: int, max_part: int = 2):
    return st.tuples(*[st.integers(0, max_part) for _ in range(n)])
