"""Cherednik's scalar product at ``t = q^k`` and the reproducing kernel.

At ``t = q^k`` the weight is a Laurent polynomial, so the torus integral is
just the constant term. Coefficients here are ``QTRat`` values free of t.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .laurent import LPoly, _accumulate
from .macdonald import compute_E
from .qt_field import QTRat, mono, qpoch
from .weights import as_composition, c_lambda

__all__ = [
    "weight_poly",
    "specialize_poly",
    "scalar_product",
    "reproducing_kernel_series",
    "reproducing_check",
    "ReproducingReport",
]


@lru_cache(maxsize=None)
def weight_poly(n: int, k: int) -> LPoly:
    """``prod_{i<j} (y_i/y_j; q)_k (q y_j/y_i; q)_k`` expanded."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    w = LPoly.const(n, QTRat(1))
    for i in range(n):
        for j in range(i + 1, n):
            for r in range(k):
                e = [0] * n
                e[i], e[j] = 1, -1
                w = w * (LPoly.const(n, QTRat(1)) - LPoly.monomial(e, mono(r, 0)))
                e[i], e[j] = -1, 1
                w = w * (LPoly.const(n, QTRat(1)) - LPoly.monomial(e, mono(r + 1, 0)))
    return w


def specialize_poly(f: LPoly, k: int, invert: bool = False) -> LPoly:
    """Coefficients at ``t = q^k``, after ``q, t -> 1/q, 1/t`` if ``invert``."""
    if invert:
        return f.map_coeffs(lambda c: QTRat(c).invert_params().specialize_t(k))
    return f.map_coeffs(lambda c: QTRat(c).specialize_t(k))


def _ct_product(h: LPoly, w: LPoly) -> QTRat:
    """Constant term of ``h * w`` without forming the product."""
    total = QTRat(0)
    for e, c in h.terms.items():
        v = w.terms.get(tuple(-a for a in e))
        if v is not None:
            total = total + c * v
    return total


def scalar_product(f: LPoly, g: LPoly, n: int, k: int) -> QTRat:
    """``CT[ f(y|q,q^k) g(1/y | 1/q, 1/q^k) w(y|q,q^k) ]``."""
    if f.nvars != n or g.nvars != n:
        raise ValueError("polynomials must live in n variables")
    fs = specialize_poly(f, k)
    gs = specialize_poly(g, k, invert=True).invert_vars()
    return _ct_product(fs * gs, weight_poly(n, k))


def reproducing_kernel_series(n: int, k: int, D: int) -> LPoly:
    """``K(x;y|q,q^k) = prod_{i,j} 1/(q^[i>j] x_i/y_j; q)_{k+[i=j]}`` up to x-degree D.

    Uses ``1/(z;q)_m = sum_l (q^m;q)_l/(q;q)_l z^l``.
    """
    f = {(0,) * (2 * n): QTRat(1)}
    qq = [qpoch((1, 0), l) for l in range(D + 1)]
    for i in range(n):
        for j in range(n):
            m = k + (1 if i == j else 0)
            s = 1 if i > j else 0
            coeffs = [qpoch((m, 0), l) / qq[l] * mono(s * l, 0) for l in range(D + 1)]
            out: dict = {}
            for e, c in f.items():
                dx = sum(e[:n])
                for l in range(0, D - dx + 1):
                    g = list(e)
                    g[i] += l
                    g[n + j] -= l
                    _accumulate(out, tuple(g), c * coeffs[l])
            f = out
    return LPoly._raw(2 * n, f)


@dataclass
class ReproducingReport:
    lam: tuple
    n: int
    k: int
    D: int
    passed: bool
    left: LPoly
    right: LPoly


def reproducing_check(lam: Sequence[int], n: int, k: int, D: int) -> ReproducingReport:
    """Constant term in y of ``K(x;y) E_lam(y) w(y)`` against ``C_lam E_lam(x)``."""
    lam = as_composition(lam)
    if len(lam) != n:
        raise ValueError(f"{lam} does not have {n} parts")
    if D < sum(lam):
        raise ValueError("D must be at least |lam|")
    E = specialize_poly(compute_E(lam).poly, k)
    Ew = E * weight_poly(n, k)
    Kser = reproducing_kernel_series(n, k, D)
    left: dict = {}
    for e, c in Kser.terms.items():
        v = Ew.terms.get(tuple(-a for a in e[n:]))
        if v is not None:
            _accumulate(left, e[:n], c * v)
    left_p = LPoly._raw(n, left)
    right = E.scale(c_lambda(lam, k))
    return ReproducingReport(lam, n, k, D, left_p == right, left_p, right)
