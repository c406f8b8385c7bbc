"""Sparse Laurent polynomials over a coefficient field.

An :class:`LPoly` is a map from exponent tuples (negative entries allowed) to
nonzero coefficients. Coefficients are whatever the active field produces:
``QTRat`` in symbolic mode, ``Fraction`` in fastcheck mode, plain ``int``
for monomials built from scratch. Mixed use is fine as long as the values
support ``+``, ``*`` and ``==`` with each other.

Terms are kept unordered; :meth:`LPoly.to_text` sorts them in descending
lexicographic order of exponents, so the leading monomial comes first.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence

from .qt_field import SYMBOLIC

__all__ = ["LPoly", "lp_div_diff", "var_names"]


def _accumulate(acc: dict, e: tuple, c) -> None:
    v = acc.get(e)
    v = c if v is None else v + c
    if v:
        acc[e] = v
    else:
        acc.pop(e, None)


def var_names(nvars: int, split: int | None = None) -> list[str]:
    """``x1..xn`` or, with ``split=n``, ``x1..xn, y1..y(nvars-n)``."""
    if split is None:
        return [f"x{i + 1}" for i in range(nvars)]
    return [f"x{i + 1}" for i in range(split)] + [f"y{i + 1}" for i in range(nvars - split)]


class LPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in dict(terms).items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                _accumulate(self.terms, e, c)

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c=1) -> "LPoly":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "LPoly":
        exps = tuple(exps)
        return cls._raw(len(exps), {exps: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "LPoly":
        """The variable ``x_i`` (1-based) raised to ``power``."""
        e = [0] * nvars
        e[i - 1] = power
        return cls._raw(nvars, {tuple(e): 1})

    # structure ---------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def __eq__(self, other):
        if isinstance(other, LPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    __hash__ = None

    def _check(self, other: "LPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"mismatched rings: {self.nvars} vs {other.nvars} variables")

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # arithmetic --------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LPoly):
            other = LPoly.const(self.nvars, other)
        self._check(other)
        a, b = (self, other) if len(self.terms) >= len(other.terms) else (other, self)
        r = dict(a.terms)
        for e, c in b.terms.items():
            _accumulate(r, e, c)
        return LPoly._raw(self.nvars, r)

    __radd__ = __add__

    def __neg__(self):
        return LPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LPoly):
            other = LPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LPoly):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        r: dict = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                _accumulate(r, tuple(x + y for x, y in zip(ea, eb)), ca * cb)
        return LPoly._raw(self.nvars, r)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "LPoly":
        """Scalar multiplication."""
        if not c:
            return LPoly._raw(self.nvars, {})
        if c == 1:
            return self
        r = {}
        for e, v in self.terms.items():
            w = v * c
            if w:
                r[e] = w
        return LPoly._raw(self.nvars, r)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        r = LPoly.const(self.nvars, 1)
        for _ in range(k):
            r = r * self
        return r

    def map_coeffs(self, fn: Callable) -> "LPoly":
        r = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                r[e] = v
        return LPoly._raw(self.nvars, r)

    # variable actions ------------------------------------------------------

    def permute(self, w: Sequence[int]) -> "LPoly":
        """``x_j -> x_{w(j)}`` with ``w`` given one-based as ``(w(1), ..., w(n))``."""
        if sorted(w) != list(range(1, self.nvars + 1)):
            raise ValueError(f"{tuple(w)} is not a permutation of 1..{self.nvars}")
        r = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for j, a in enumerate(e):
                f[w[j] - 1] = a
            r[tuple(f)] = c
        return LPoly._raw(self.nvars, r)

    def swap(self, i: int, j: int) -> "LPoly":
        """Exchange ``x_i`` and ``x_j`` (1-based)."""
        i, j = i - 1, j - 1
        r = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            r[tuple(f)] = c
        return LPoly._raw(self.nvars, r)

    def qshift(self, i: int, e: int, field=SYMBOLIC) -> "LPoly":
        """``x_i -> q**e x_i``."""
        return self.scale_var(i, field.mono(e, 0))

    def scale_var(self, i: int, c) -> "LPoly":
        """``x_i -> c x_i``; ``c`` must be invertible if negative powers occur."""
        r = {}
        cache: dict = {}
        for ex, v in self.terms.items():
            a = ex[i - 1]
            f = cache.get(a)
            if f is None:
                f = cache[a] = c ** a
            r[ex] = v * f
        return LPoly._raw(self.nvars, r)

    def invert_vars(self, which: Iterable[int] | None = None) -> "LPoly":
        """``x_j -> 1/x_j`` for the given 1-based indices (all by default)."""
        idx = set(range(self.nvars)) if which is None else {j - 1 for j in which}
        r = {}
        for e, c in self.terms.items():
            r[tuple(-a if j in idx else a for j, a in enumerate(e))] = c
        return LPoly._raw(self.nvars, r)

    # extraction --------------------------------------------------------------

    def coeff(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def partial_constant_term(self, block: range | Sequence[int]) -> "LPoly":
        """Coefficient of ``y^0`` where ``y`` are the 0-based positions in
        ``block``; the result lives in the remaining variables."""
        drop = set(block)
        keep = [j for j in range(self.nvars) if j not in drop]
        r: dict = {}
        for e, c in self.terms.items():
            if all(e[j] == 0 for j in drop):
                r[tuple(e[j] for j in keep)] = c
        return LPoly._raw(len(keep), r)

    def evaluate(self, point: Sequence):
        """Substitute ``x_j = point[j]``; returns a coefficient-field value."""
        if len(point) != self.nvars:
            raise ValueError("evaluation point has the wrong length")
        total = 0
        for e, c in self.terms.items():
            v = c
            for p, a in zip(point, e):
                if a:
                    if a < 0 and not p:
                        raise ZeroDivisionError("zero substituted into a negative power")
                    v = v * p ** a
            total = total + v
        return total

    def homogeneous_component(self, d: int) -> "LPoly":
        return LPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def bidegree_component(self, dx: int, dy: int, split: int | None = None) -> "LPoly":
        """Terms of x-degree ``dx`` and y-degree ``dy``; x is the first half."""
        n = self.nvars // 2 if split is None else split
        r = {e: c for e, c in self.terms.items() if sum(e[:n]) == dx and sum(e[n:]) == dy}
        return LPoly._raw(self.nvars, r)

    def truncate(self, D: int, block: range | None = None) -> "LPoly":
        """Drop terms whose degree in ``block`` (default: all variables) exceeds D."""
        if block is None:
            return LPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= D})
        return LPoly._raw(self.nvars, {e: c for e, c in self.terms.items()
                                       if sum(e[j] for j in block) <= D})

    def embed(self, nvars: int, offset: int = 0) -> "LPoly":
        """The same polynomial inside a ring with ``nvars`` variables."""
        pad_l = (0,) * offset
        pad_r = (0,) * (nvars - offset - self.nvars)
        return LPoly._raw(nvars, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    # text --------------------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = var_names(self.nvars) if names is None else names
        out = []
        for e in sorted(self.terms, reverse=True):
            m = _mono_text(e, names)
            c = self.terms[e]
            if not m:
                body = str(c)
            elif c == 1:
                body = m
            elif c == -1:
                body = "-" + m
            else:
                body = f"{_coeff_text(c)} * {m}"
            if out and body.startswith("-"):
                out.append(" - " + body[1:])
            else:
                out.append((" + " if out else "") + body)
        return "".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LPoly({self.nvars}, {self.to_text()!r})"


def _mono_text(e: tuple, names: Sequence[str]) -> str:
    out = []
    for name, a in zip(names, e):
        if a == 1:
            out.append(name)
        elif a:
            out.append(f"{name}^{a}")
    return "*".join(out)


def _coeff_text(c) -> str:
    s = str(c)
    # a top-level sum needs brackets before "* monomial"
    depth = 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and k > 0 and ch in "+-" and s[k - 1] == " ":
            return f"({s})"
    return s


def lp_div_diff(f: LPoly, i: int, offset: int = 0) -> LPoly:
    """Exact quotient ``f / (x_i - x_{i+1})``.

    Monomials are grouped by the exponents of all other variables and by
    ``a_i + a_{i+1}``; within a group division is by ``x - y`` of a
    one-variable-pair polynomial, done by running sums from the top ``x``
    power down. Raises ``ArithmeticError`` if a remainder is left.
    """
    p, r_ = offset + i - 1, offset + i
    groups: dict = {}
    for e, c in f.terms.items():
        key = e[:p] + (e[p] + e[r_],) + e[r_ + 1:]
        groups.setdefault(key, {})[e[p]] = c
    out: dict = {}
    for key, row in groups.items():
        s = key[p]
        hi, lo = max(row), min(row)
        # f = sum_a c_a x^a y^(s-a); quotient coefficients b_a with
        # c_a = b_{a-1} - b_a  (b for x^a y^(s-1-a))
        carry = 0
        for a in range(hi, lo - 1, -1):
            carry = carry + row.get(a, 0)
            # carry now equals b_{a-1}
            if a - 1 >= lo and carry:
                e = key[:p] + (a - 1, s - a) + key[p + 1:]
                out[e] = carry
            elif a - 1 < lo and carry:
                raise ArithmeticError(f"polynomial is not divisible by x{i} - x{i + 1}")
    return LPoly._raw(f.nvars, out)
