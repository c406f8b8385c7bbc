"""Demazure-Lusztig operators, the rotation omega and the q-Dunkl operators.

Everything is rescaled so that no half powers of ``t`` appear:

* ``H_i = t^(1/2) T_i`` satisfies ``(H_i - t)(H_i + 1) = 0``;
* ``M_i = H_i ... H_{n-1} omega H_1^-1 ... H_{i-1}^-1``, a constant multiple
  of the Cherednik operator ``Y_i``.

Operator products act rightmost first. Each function takes the coefficient
field as a keyword and an ``offset`` so that it can act on the second block
of variables of a ``2n``-variable ring (``offset=n`` means the y block).

``H_i`` is applied monomial by monomial through its closed form. With
``a = a_i`` and ``b = a_{i+1}`` and ``x^(j)`` the monomial with exponents
``j, a+b-j`` in positions ``i, i+1``::

    a == b:  H x^a = t x^a
    a >  b:  H x^a = x^(s_i a) + (1 - t) sum_{b<j<a} x^(j)
    a <  b:  H x^a = (t - 1) x^a + t x^(s_i a) + (t - 1) sum_{a<j<b} x^(j)

:func:`apply_H_via_division` computes the same thing from the defining
divided-difference formula and is kept as a cross-check.
"""

from __future__ import annotations

from .laurent import LPoly, _accumulate, lp_div_diff
from .qt_field import SYMBOLIC

__all__ = [
    "apply_H",
    "apply_H_inv",
    "apply_H_via_division",
    "apply_omega",
    "apply_M",
    "apply_S",
    "apply_word",
]


def _combine(nvars: int, buckets) -> LPoly:
    """``sum_k factor_k * bucket_k`` where each bucket holds unscaled sums."""
    out: dict = {}
    for factor, bucket in buckets:
        for e, c in bucket.items():
            if c:
                _accumulate(out, e, c * factor)
    return LPoly._raw(nvars, out)


def _check_index(i: int, n: int, top: int) -> None:
    if not 1 <= i <= top:
        raise ValueError(f"operator index {i} outside 1..{top} for n={n}")


def _block(f: LPoly, offset: int, n: int | None) -> int:
    n = f.nvars - offset if n is None else n
    if offset < 0 or offset + n > f.nvars:
        raise ValueError("operator block does not fit in the ring")
    return n


def apply_S(i: int, f: LPoly, offset: int = 0, n: int | None = None) -> LPoly:
    """The transposition ``s_i`` on variables."""
    n = _block(f, offset, n)
    _check_index(i, n, n - 1)
    return f.swap(offset + i, offset + i + 1)


def apply_H(i: int, f: LPoly, field=SYMBOLIC, offset: int = 0, n: int | None = None) -> LPoly:
    n = _block(f, offset, n)
    _check_index(i, n, n - 1)
    p, r = offset + i - 1, offset + i
    one: dict = {}
    by_t: dict = {}
    by_m: dict = {}  # coefficient (1 - t)
    for e, c in f.terms.items():
        a, b = e[p], e[r]
        if a == b:
            _accumulate(by_t, e, c)
            continue
        s = a + b
        sw = e[:p] + (b, a) + e[r + 1:]
        if a > b:
            _accumulate(one, sw, c)
            for j in range(b + 1, a):
                _accumulate(by_m, e[:p] + (j, s - j) + e[r + 1:], c)
        else:
            _accumulate(by_m, e, -c)
            _accumulate(by_t, sw, c)
            for j in range(a + 1, b):
                _accumulate(by_m, e[:p] + (j, s - j) + e[r + 1:], -c)
    return _combine(f.nvars, ((1, one), (field.t, by_t), (1 - field.t, by_m)))


def apply_H_inv(i: int, f: LPoly, field=SYMBOLIC, offset: int = 0, n: int | None = None) -> LPoly:
    """``H_i^-1 = (H_i - (t - 1)) / t`` in closed form."""
    n = _block(f, offset, n)
    _check_index(i, n, n - 1)
    p, r = offset + i - 1, offset + i
    one: dict = {}
    by_ti: dict = {}
    by_m: dict = {}  # coefficient (1/t - 1)
    for e, c in f.terms.items():
        a, b = e[p], e[r]
        if a == b:
            _accumulate(by_ti, e, c)
            continue
        s = a + b
        sw = e[:p] + (b, a) + e[r + 1:]
        if a > b:
            _accumulate(by_ti, sw, c)
            _accumulate(by_m, e, c)
            for j in range(b + 1, a):
                _accumulate(by_m, e[:p] + (j, s - j) + e[r + 1:], c)
        else:
            _accumulate(one, sw, c)
            for j in range(a + 1, b):
                _accumulate(by_m, e[:p] + (j, s - j) + e[r + 1:], -c)
    ti = 1 / field.t
    return _combine(f.nvars, ((1, one), (ti, by_ti), (ti - 1, by_m)))


def apply_H_via_division(i: int, f: LPoly, field=SYMBOLIC, offset: int = 0,
                         n: int | None = None) -> LPoly:
    """``H_i f = t f + (x_{i+1} - t x_i) (s_i f - f) / (x_{i+1} - x_i)``."""
    n = _block(f, offset, n)
    _check_index(i, n, n - 1)
    g = apply_S(i, f, offset, n) - f
    quo = -lp_div_diff(g, i, offset)  # (s_i f - f) / (x_{i+1} - x_i)
    xi = LPoly.var(f.nvars, offset + i)
    xj = LPoly.var(f.nvars, offset + i + 1)
    return f.scale(field.t) + (xj - xi.scale(field.t)) * quo


def apply_omega(e: int, f: LPoly, field=SYMBOLIC, offset: int = 0, n: int | None = None) -> LPoly:
    """``omega x^l = q^(l_1) x^(l_2, ..., l_n, l_1)`` for ``e=+1``; ``e=-1`` inverts."""
    n = _block(f, offset, n)
    if e not in (1, -1):
        raise ValueError("omega exponent must be +1 or -1")
    lo, hi = offset, offset + n
    out: dict = {}
    cache: dict = {}
    for ex, c in f.terms.items():
        blk = ex[lo:hi]
        if e == 1:
            k = blk[0]
            nb = blk[1:] + blk[:1]
        else:
            k = -blk[-1]
            nb = blk[-1:] + blk[:-1]
        if k:
            m = cache.get(k)
            if m is None:
                m = cache[k] = field.mono(k, 0)
            c = c * m
        out[ex[:lo] + nb + ex[hi:]] = c
    return LPoly._raw(f.nvars, out)


def apply_M(i: int, f: LPoly, field=SYMBOLIC, offset: int = 0, n: int | None = None) -> LPoly:
    n = _block(f, offset, n)
    _check_index(i, n, n)
    g = f
    for j in range(i - 1, 0, -1):
        g = apply_H_inv(j, g, field, offset, n)
    g = apply_omega(1, g, field, offset, n)
    for j in range(n - 1, i - 1, -1):
        g = apply_H(j, g, field, offset, n)
    return g


_OPS = {
    "S": lambda i, f, field, off, n: apply_S(i, f, off, n),
    "H": lambda i, f, field, off, n: apply_H(i, f, field, off, n),
    "Hinv": lambda i, f, field, off, n: apply_H_inv(i, f, field, off, n),
    "Omega": lambda i, f, field, off, n: apply_omega(i, f, field, off, n),
    "M": lambda i, f, field, off, n: apply_M(i, f, field, off, n),
}


def apply_word(word, f: LPoly, field=SYMBOLIC, offset: int = 0, n: int | None = None) -> LPoly:
    """Apply a product of operators written left to right as ``(kind, index)``
    pairs; the rightmost factor acts first."""
    for kind, i in reversed(list(word)):
        f = _OPS[kind](i, f, field, offset, n)
    return f
