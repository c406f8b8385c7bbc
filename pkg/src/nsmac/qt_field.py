"""Exact arithmetic in the rational function field Q(q, t).

``QTRat`` values are immutable and always stored fully reduced: numerator and
denominator are coprime in Z[q, t] and the denominator's first coefficient in
canonical order (ascending total degree, q before t) is positive. Equality is
therefore structural.

Two coefficient domains are exposed for the rest of the package:

* :data:`SYMBOLIC` computes with ``QTRat`` exactly.
* :class:`EvalField` sends ``(q, t)`` to a fixed pair of rationals and
  computes with :class:`fractions.Fraction`. It is the fastcheck mode; any
  denominator vanishing at the chosen point surfaces as ``ZeroDivisionError``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce

from . import _zpoly as Z

__all__ = [
    "QTPoly",
    "QTRat",
    "q",
    "t",
    "mono",
    "qpoch",
    "qt_invert_params",
    "SymbolicField",
    "EvalField",
    "SYMBOLIC",
]


class QTPoly:
    """Polynomial in Z[q, t] with nonnegative exponents."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0, 0): terms} if terms else {}
        else:
            terms = {tuple(e): int(c) for e, c in dict(terms).items() if c}
            if any(i < 0 or j < 0 for i, j in terms):
                raise ValueError("QTPoly exponents must be nonnegative")
        self.terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QTPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        if isinstance(other, QTPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = _as_poly(other)
        return QTPoly._raw(Z.add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        return QTPoly._raw(Z.sub(self.terms, other.terms))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __neg__(self):
        return QTPoly._raw(Z.neg(self.terms))

    def __mul__(self, other):
        other = _as_poly(other)
        return QTPoly._raw(Z.mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        return QTPoly._raw(Z.power(self.terms, k))

    def divexact(self, other: "QTPoly") -> "QTPoly":
        return QTPoly._raw(Z.divexact(self.terms, _as_poly(other).terms))

    def gcd(self, other: "QTPoly") -> "QTPoly":
        return QTPoly._raw(Z.gcd(self.terms, _as_poly(other).terms))

    def evaluate(self, qv, tv):
        return Z.evaluate(self.terms, qv, tv)

    def __str__(self):
        return Z.to_string(self.terms)

    def __repr__(self):
        return f"QTPoly({str(self)!r})"


def _as_poly(x) -> QTPoly:
    if isinstance(x, QTPoly):
        return x
    if isinstance(x, int):
        return QTPoly(x)
    raise TypeError(f"cannot use {type(x).__name__} as a QTPoly")


_ONE = Z.ONE


def _is_atom(a: dict) -> bool:
    if len(a) != 1:
        return False
    ((i, j), c), = a.items()
    if (i, j) == (0, 0):
        return c > 0
    return c == 1 and (i == 0 or j == 0)


def _wrap(a: dict, atom_ok: bool) -> str:
    s = Z.to_string(a)
    if len(a) == 1 and (atom_ok or _is_atom(a)):
        return s
    return f"({s})"


class QTRat:
    """Element of Q(q, t), stored as a reduced fraction of integer polynomials."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, Fraction) or isinstance(den, Fraction):
            if not all(isinstance(v, (int, Fraction)) for v in (num, den)):
                raise TypeError("mixing Fraction and polynomial arguments")
            f = Fraction(num) / Fraction(den)
            num, den = f.numerator, f.denominator
        if isinstance(num, QTRat) or isinstance(den, QTRat):
            r = _coerce(num) / _coerce(den)
        else:
            r = _make(_to_dict(num), _to_dict(den))
        self._n, self._d, self._hash = r._n, r._d, None

    @classmethod
    def _raw(cls, n: dict, d: dict) -> "QTRat":
        r = cls.__new__(cls)
        r._n = n
        r._d = d
        r._hash = None
        return r

    # structure -----------------------------------------------------------

    @property
    def num(self) -> QTPoly:
        return QTPoly._raw(self._n)

    @property
    def den(self) -> QTPoly:
        return QTPoly._raw(self._d)

    def is_polynomial(self) -> bool:
        return self._d == _ONE

    def is_constant(self) -> bool:
        return self._d == _ONE and Z.is_constant(self._n)

    def __bool__(self):
        return bool(self._n)

    def __eq__(self, other):
        if isinstance(other, QTRat):
            return self._n == other._n and self._d == other._d
        if isinstance(other, int):
            return self._d == _ONE and self._n == ({(0, 0): other} if other else {})
        if isinstance(other, Fraction):
            return self == QTRat(other)
        if isinstance(other, QTPoly):
            return self._d == _ONE and self._n == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self._d == _ONE and Z.is_constant(self._n):
                self._hash = hash(self._n.get((0, 0), 0))
            else:
                self._hash = hash((frozenset(self._n.items()), frozenset(self._d.items())))
        return self._hash

    # arithmetic ----------------------------------------------------------

    def __neg__(self):
        return QTRat._raw(Z.neg(self._n), self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, -o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _add(o, -self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(self, o.inverse())

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mul(o, self.inverse())

    def inverse(self) -> "QTRat":
        if not self._n:
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        n, d = self._d, self._n
        if Z.leading_coeff(d) < 0:
            n, d = Z.neg(n), Z.neg(d)
        return QTRat._raw(n, d)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QTRat._raw(Z.power(self._n, k), Z.power(self._d, k))

    # substitutions -------------------------------------------------------

    def invert_params(self) -> "QTRat":
        """Image under the field automorphism ``q -> 1/q, t -> 1/t``."""
        if not self._n:
            return self
        rn, (ni, nj) = Z.reflect(self._n)
        rd, (di, dj) = Z.reflect(self._d)
        # a(1/q,1/t) = rn q^-ni t^-nj / (rd q^-di t^-dj)
        ei, ej = di - ni, dj - nj
        num = Z.shift(rn, max(ei, 0), max(ej, 0))
        den = Z.shift(rd, max(-ei, 0), max(-ej, 0))
        return _make(num, den)

    def specialize_t(self, k: int) -> "QTRat":
        """Substitute ``t = q**k``."""
        d = Z.subs_t_qk(self._d, k)
        if not d:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at t = q^{k}")
        return _make(Z.subs_t_qk(self._n, k), d)

    def evaluate(self, qv, tv) -> Fraction:
        d = Z.evaluate(self._d, Fraction(qv), Fraction(tv))
        if not d:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at q={qv}, t={tv}")
        return Fraction(Z.evaluate(self._n, Fraction(qv), Fraction(tv))) / d

    # text ----------------------------------------------------------------

    def __str__(self):
        if self._d == _ONE:
            return Z.to_string(self._n)
        return f"{_wrap(self._n, atom_ok=True)}/{_wrap(self._d, atom_ok=False)}"

    def __repr__(self):
        return f"QTRat({str(self)!r})"


def _to_dict(x) -> dict:
    if isinstance(x, QTPoly):
        return x.terms
    if isinstance(x, int):
        return {(0, 0): x} if x else {}
    if isinstance(x, dict):
        return QTPoly(x).terms
    raise TypeError(f"cannot build QTRat from {type(x).__name__}")


def _coerce(x) -> QTRat | None:
    if isinstance(x, QTRat):
        return x
    if isinstance(x, int):
        return QTRat._raw({(0, 0): x} if x else {}, _ONE)
    if isinstance(x, Fraction):
        return QTRat(x)
    if isinstance(x, QTPoly):
        return QTRat._raw(x.terms, _ONE)
    return None


def _make(n: dict, d: dict) -> QTRat:
    if not d:
        raise ZeroDivisionError("zero denominator in Q(q,t)")
    if not n:
        return QTRat._raw({}, _ONE)
    if d == _ONE:
        return QTRat._raw(n, _ONE)
    _, n1, d1 = Z.cofactors(n, d)
    if Z.leading_coeff(d1) < 0:
        n1, d1 = Z.neg(n1), Z.neg(d1)
    return QTRat._raw(n1, d1)


def _add(x: QTRat, y: QTRat) -> QTRat:
    a, b = x._n, x._d
    c, d = y._n, y._d
    if not a:
        return y
    if not c:
        return x
    if b == _ONE and d == _ONE:
        return QTRat._raw(Z.add(a, c), _ONE)
    if b == d:
        return _make(Z.add(a, c), b)
    g, b1, d1 = Z.cofactors(b, d)
    n = Z.add(Z.mul(a, d1), Z.mul(c, b1))
    if not n:
        return QTRat._raw({}, _ONE)
    if g == _ONE:
        return QTRat._raw(n, Z.mul(b, d))
    g2, n2, g_rest = Z.cofactors(n, g)
    return QTRat._raw(n2, Z.mul(Z.mul(b1, d1), g_rest))


def _mul(x: QTRat, y: QTRat) -> QTRat:
    a, b = x._n, x._d
    c, d = y._n, y._d
    if not a or not c:
        return QTRat._raw({}, _ONE)
    if b == _ONE and d == _ONE:
        return QTRat._raw(Z.mul(a, c), _ONE)
    if d != _ONE:
        _, a, d = Z.cofactors(a, d)
    if b != _ONE:
        _, c, b = Z.cofactors(c, b)
    n, m = Z.mul(a, c), Z.mul(b, d)
    if Z.leading_coeff(m) < 0:
        n, m = Z.neg(n), Z.neg(m)
    return QTRat._raw(n, m)


def mono(a: int, b: int, c: int = 1) -> QTRat:
    """The monomial ``c * q**a * t**b``; negative exponents allowed."""
    if not c:
        return QTRat._raw({}, _ONE)
    n = {(max(a, 0), max(b, 0)): c}
    d = {(max(-a, 0), max(-b, 0)): 1}
    return QTRat._raw(n, d)


q = mono(1, 0)
t = mono(0, 1)


def qt_invert_params(a: QTRat) -> QTRat:
    return a.invert_params()


def qpoch(a_exp: tuple[int, int], m: int) -> QTRat:
    """Finite q-Pochhammer ``(q**a t**b; q)_m`` as an element of Q(q, t)."""
    if m < 0:
        raise ValueError("qpoch length must be nonnegative")
    a, b = a_exp
    r = QTRat(1)
    for i in range(m):
        r = r * (1 - mono(a + i, b))
    return r


# --------------------------------------------------------------------------
# coefficient domains


class SymbolicField:
    """Exact Q(q, t) with ``QTRat`` elements.

    With ``inverted=True`` the generators are ``1/q`` and ``1/t``: operators
    built over this field are the parameter-inverted ones.
    """

    symbolic = True

    def __init__(self, inverted: bool = False):
        self.is_inverted = inverted
        self.name = "symbolic-inverted" if inverted else "symbolic"
        self._sign = -1 if inverted else 1
        self.zero = QTRat(0)
        self.one = QTRat(1)
        self.q = mono(self._sign, 0)
        self.t = mono(0, self._sign)

    def mono(self, a: int, b: int) -> QTRat:
        return mono(self._sign * a, self._sign * b)

    def coerce(self, x) -> QTRat:
        c = _coerce(x)
        if c is None:
            raise TypeError(f"cannot coerce {type(x).__name__} into Q(q,t)")
        return c

    def invert(self, x: QTRat) -> QTRat:
        return x.invert_params()

    def inverted(self) -> "SymbolicField":
        return SymbolicField(not self.is_inverted)

    def metadata(self) -> dict:
        return {"mode": "symbolic"}

    def __repr__(self):
        return f"SymbolicField(inverted={self.is_inverted})"

    def __eq__(self, other):
        return isinstance(other, SymbolicField) and other.is_inverted == self.is_inverted

    def __hash__(self):
        return hash(("symbolic", self.is_inverted))


SYMBOLIC = SymbolicField()


class EvalField:
    """Q(q, t) evaluated at a fixed rational point; elements are Fractions."""

    name = "fastcheck"
    symbolic = False

    def __init__(self, qv, tv):
        self.qv = Fraction(qv)
        self.tv = Fraction(tv)
        if self.qv in (0, 1, -1) or self.tv in (0, 1, -1):
            raise ValueError("evaluation point must avoid 0 and roots of unity")
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.q = self.qv
        self.t = self.tv

    @classmethod
    def random(cls, seed: int) -> "EvalField":
        rng = random.Random(seed)

        def draw():
            while True:
                v = Fraction(rng.randint(2, 97), rng.randint(2, 97))
                if v not in (0, 1):
                    return v

        qv = draw()
        tv = draw()
        while tv == qv:
            tv = draw()
        return cls(qv, tv)

    def mono(self, a: int, b: int) -> Fraction:
        return self.qv ** a * self.tv ** b

    def coerce(self, x) -> Fraction:
        if isinstance(x, QTRat):
            return x.evaluate(self.qv, self.tv)
        return Fraction(x)

    def invert(self, x):
        raise TypeError("fastcheck values cannot be parameter-inverted; use inverted()")

    def inverted(self) -> "EvalField":
        return EvalField(1 / self.qv, 1 / self.tv)

    def metadata(self) -> dict:
        return {"mode": self.name, "q": str(self.qv), "t": str(self.tv)}

    def __repr__(self):
        return f"EvalField(q={self.qv}, t={self.tv})"

    def __eq__(self, other):
        return isinstance(other, EvalField) and (self.qv, self.tv) == (other.qv, other.tv)

    def __hash__(self):
        return hash((self.qv, self.tv))


def product(values, one=None):
    """Product of an iterable of field elements."""
    return reduce(lambda x, y: x * y, values, QTRat(1) if one is None else one)
