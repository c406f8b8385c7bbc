"""Kernels for bivariate integer polynomials in Z[q, t].

A polynomial is a plain ``dict`` mapping ``(e_q, e_t)`` to a nonzero ``int``.
Exponents are nonnegative. Functions here never mutate their arguments.

Two gcd routes are provided:

* :func:`gcd_heuristic` evaluates at large integers, takes integer gcds and
  reads the answer back off symmetric digits (GCDHEU, one level per
  variable). Every candidate is confirmed by exact division, so a wrong
  guess is never returned; at most ``None`` is.
* :func:`gcd_prs` is the deterministic route: polynomials in ``t`` over
  ``Z[q]``, content extraction and a subresultant remainder sequence.

:func:`gcd` tries the first and falls back to the second.
"""

from __future__ import annotations

from math import gcd as igcd
from math import isqrt

ZERO: dict = {}
ONE: dict = {(0, 0): 1}

HEU_TRIES = 6


# --------------------------------------------------------------------------
# ring operations


def add(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    r = dict(a)
    for e, c in b.items():
        v = r.get(e, 0) + c
        if v:
            r[e] = v
        else:
            r.pop(e, None)
    return r


def sub(a: dict, b: dict) -> dict:
    r = dict(a)
    for e, c in b.items():
        v = r.get(e, 0) - c
        if v:
            r[e] = v
        else:
            r.pop(e, None)
    return r


def neg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def mul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        ((bi, bj), bc), = b.items()
        if bc == 1:
            return {(i + bi, j + bj): c for (i, j), c in a.items()}
        return {(i + bi, j + bj): c * bc for (i, j), c in a.items()}
    r: dict = {}
    get = r.get
    for (bi, bj), bc in b.items():
        for (i, j), c in a.items():
            e = (i + bi, j + bj)
            r[e] = get(e, 0) + c * bc
    return {e: c for e, c in r.items() if c}


def scale(a: dict, k: int) -> dict:
    if not k:
        return {}
    if k == 1:
        return a
    return {e: c * k for e, c in a.items()}


def shift(a: dict, di: int, dj: int) -> dict:
    if not di and not dj:
        return a
    return {(i + di, j + dj): c for (i, j), c in a.items()}


def power(a: dict, k: int) -> dict:
    r = ONE
    base = a
    while k:
        if k & 1:
            r = mul(r, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return r


def content(a: dict) -> int:
    g = 0
    for c in a.values():
        g = igcd(g, c)
        if g == 1:
            break
    return g


def max_norm(a: dict) -> int:
    return max((abs(c) for c in a.values()), default=0)


def min_exponents(a: dict) -> tuple[int, int]:
    return min(i for i, _ in a), min(j for _, j in a)


def degrees(a: dict) -> tuple[int, int]:
    return max(i for i, _ in a), max(j for _, j in a)


def is_constant(a: dict) -> bool:
    return not a or (len(a) == 1 and (0, 0) in a)


def canonical_key(e: tuple[int, int]) -> tuple[int, int]:
    """Sort key of the canonical order: ascending total degree, q before t."""
    return (e[0] + e[1], -e[0])


def leading_coeff(a: dict) -> int:
    """Coefficient of the first term in canonical order."""
    return a[min(a, key=canonical_key)]


# --------------------------------------------------------------------------
# exact division through Kronecker packing


def _pack(a: dict, B: int, s: int) -> int:
    v = 0
    for (i, j), c in a.items():
        v += c << (s * (i + B * j))
    return v


def _unpack(v: int, B: int, s: int) -> dict:
    """Read symmetric base-2**s digits of ``v`` back into Z[q, t]."""
    r = {}
    mask = (1 << s) - 1
    half = 1 << (s - 1)
    e = 0
    while v:
        d = v & mask
        if d >= half:
            d -= 1 << s
        if d:
            r[(e % B, e // B)] = d
        v = (v - d) >> s
        e += 1
    return r


def _packed_divexact(a: dict, h: dict, B: int, s: int) -> dict | None:
    """Candidate ``a / h`` read off packed integers; ``None`` when it fails."""
    A = _pack(a, B, s)
    H = _pack(h, B, s)
    Q, R = divmod(A, H)
    if R:
        return None
    cand = _unpack(Q, B, s)
    if mul(cand, h) != a:
        return None
    return cand


def _bits_for(*polys: dict) -> int:
    return max(max_norm(p) for p in polys).bit_length()


def divexact(a: dict, h: dict) -> dict:
    """Exact quotient ``a / h`` in Z[q, t]; raises ``ArithmeticError`` otherwise."""
    if not h:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    if len(h) == 1:
        ((hi, hj), hc), = h.items()
        r = {}
        for (i, j), c in a.items():
            qc, rc = divmod(c, hc)
            if rc or i < hi or j < hj:
                raise ArithmeticError("inexact division")
            r[(i - hi, j - hj)] = qc
        return r
    B = max(degrees(a)[0], degrees(h)[0]) + 1
    s = _bits_for(a, h) + 8
    for _ in range(3):
        q = _packed_divexact(a, h, B, s)
        if q is not None:
            return q
        s *= 2
    return _divexact_classical(a, h)


def _divexact_classical(a: dict, h: dict) -> dict:
    """Multivariate division by leading terms in lex order (t first, then q)."""
    key = lambda e: (e[1], e[0])
    lead = max(h, key=key)
    lc = h[lead]
    rem = dict(a)
    quo: dict = {}
    while rem:
        e = max(rem, key=key)
        c = rem[e]
        qc, rc = divmod(c, lc)
        di, dj = e[0] - lead[0], e[1] - lead[1]
        if rc or di < 0 or dj < 0:
            raise ArithmeticError("inexact division")
        quo[(di, dj)] = qc
        rem = sub(rem, {(i + di, j + dj): c2 * qc for (i, j), c2 in h.items()})
    return quo


def divides(h: dict, a: dict) -> bool:
    try:
        divexact(a, h)
    except ArithmeticError:
        return False
    return True


# --------------------------------------------------------------------------
# gcd


def _normalize_sign(g: dict) -> dict:
    return neg(g) if leading_coeff(g) < 0 else g


def _split_monomial(a: dict) -> tuple[tuple[int, int], dict]:
    mi, mj = min_exponents(a)
    return (mi, mj), shift(a, -mi, -mj)


def _interpolate(h, x: int) -> list:
    """Symmetric x-adic digits of an integer, lowest first."""
    r = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        r.append(d)
        h = (h - d) // x
    return r


def _u_heu_gcd(a: list, b: list):
    """Univariate heuristic gcd in Z[q] with cofactors, or ``None``."""
    ca, cb = _u_content(a), _u_content(b)
    cg = igcd(ca, cb)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    norm = min(max(abs(c) for c in a), max(abs(c) for c in b))
    x = max(2 * norm + 29, 2 * min(max(abs(c) for c in a) // abs(a[-1]),
                                   max(abs(c) for c in b) // abs(b[-1])) + 4)
    for _ in range(HEU_TRIES):
        A = _u_eval(a, x)
        Bv = _u_eval(b, x)
        if A and Bv:
            gamma = igcd(A, Bv)
            h = _u_trim(_interpolate(gamma, x))
            if h:
                h = _u_primitive(h)[1]
                try:
                    fa = _u_divexact(a, h)
                    fb = _u_divexact(b, h)
                except ArithmeticError:
                    pass
                else:
                    return [c * cg for c in h], [c * (ca // cg) for c in fa], [c * (cb // cg) for c in fb]
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _u_eval(a: list, x: int) -> int:
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def gcd_heuristic(a: dict, b: dict):
    """Heuristic gcd with cofactors, or ``None`` if no candidate verified.

    ``t`` is evaluated at a large integer, the univariate gcd in ``Z[q]`` is
    found by the same trick one level down, and the bivariate candidate is
    read back off the symmetric digits. Candidates are confirmed by exact
    division. Both inputs must be nonzero.
    """
    (ai, aj), a1 = _split_monomial(a)
    (bi, bj), b1 = _split_monomial(b)
    mono = (min(ai, bi), min(aj, bj))
    ca, cb = content(a1), content(b1)
    cg = igcd(ca, cb)
    a1 = {e: c // ca for e, c in a1.items()}
    b1 = {e: c // cb for e, c in b1.items()}
    if degrees(a1)[1] == 0 and degrees(b1)[1] == 0:
        res = _u_heu_gcd(_dict_to_u(a1), _dict_to_u(b1))
        if res is None:
            return None
        h, qa, qb = (_u_to_dict(p) for p in res)
    else:
        norm = min(max_norm(a1), max_norm(b1))
        x = 2 * norm + 29
        found = None
        for _ in range(HEU_TRIES):
            ua, ub = _eval_t(a1, x), _eval_t(b1, x)
            if ua and ub:
                res = _u_heu_gcd(ua, ub)
                if res is not None:
                    cand = _lift_t(res[0], x)
                    if cand:
                        cand = {e: c // content(cand) for e, c in cand.items()}
                        try:
                            qa = divexact(a1, cand)
                            qb = divexact(b1, cand)
                        except ArithmeticError:
                            pass
                        else:
                            found = cand
                            break
            x = 73794 * x * isqrt(isqrt(x)) // 27011
        if found is None:
            return None
        h = found
    if leading_coeff(h) < 0:
        h, qa, qb = neg(h), neg(qa), neg(qb)
    g = shift(scale(h, cg), *mono)
    fa = shift(scale(qa, ca // cg), ai - mono[0], aj - mono[1])
    fb = shift(scale(qb, cb // cg), bi - mono[0], bj - mono[1])
    return g, fa, fb


def _dict_to_u(a: dict) -> list:
    r = [0] * (degrees(a)[0] + 1)
    for (i, _), c in a.items():
        r[i] = c
    return r


def _u_to_dict(p: list) -> dict:
    return {(i, 0): c for i, c in enumerate(p) if c}


def _eval_t(a: dict, x: int) -> list:
    r = [0] * (degrees(a)[0] + 1)
    for (i, j), c in a.items():
        r[i] += c * x ** j
    return _u_trim(r)


def _lift_t(h: list, x: int) -> dict:
    r = {}
    for i, c in enumerate(h):
        for j, d in enumerate(_interpolate(c, x)):
            if d:
                r[(i, j)] = d
    return r


# univariate helpers for the PRS route: lists of ints, index = q-exponent


def _u_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _u_add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for k, c in enumerate(b):
        r[k] += c
    return _u_trim(r)


def _u_sub(a: list, b: list) -> list:
    return _u_add(a, [-c for c in b])


def _u_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _u_trim(r)


def _u_content(a: list) -> int:
    g = 0
    for c in a:
        g = igcd(g, c)
    return g


def _u_divexact(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    lc = b[-1]
    if len(a) < len(b):
        if any(a):
            raise ArithmeticError("inexact division")
        return []
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            qc, rc = divmod(c, lc)
            if rc:
                raise ArithmeticError("inexact division")
            q[k - db] = qc
            for j, y in enumerate(b):
                a[k - db + j] -= qc * y
    if any(a[:db]):
        raise ArithmeticError("inexact division")
    return _u_trim(q)


def _u_prem(a: list, b: list) -> list:
    """Pseudo-remainder lc(b)**(deg a - deg b + 1) * a mod b."""
    a = list(a)
    db = len(b) - 1
    lc = b[-1]
    delta = len(a) - len(b) + 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift_ = len(a) - 1 - db
        a = [x * lc for x in a]
        for j, y in enumerate(b):
            a[shift_ + j] -= c * y
        a.pop()
        _u_trim(a)
        delta -= 1
    if delta > 0:
        f = lc ** delta
        a = [x * f for x in a]
    return a


def _u_primitive(a: list) -> tuple[int, list]:
    c = _u_content(a)
    if a and a[-1] < 0:
        c = -c
    return c, [x // c for x in a]


def _u_gcd(a: list, b: list) -> list:
    """Gcd in Z[q] by the primitive remainder sequence."""
    if not a:
        return [-x for x in b] if b and b[-1] < 0 else list(b)
    if not b:
        return [-x for x in a] if a[-1] < 0 else list(a)
    ca, a = _u_primitive(a)
    cb, b = _u_primitive(b)
    c = igcd(ca, cb)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _u_prem(a, b)
        a, b = b, (_u_primitive(r)[1] if r else [])
    return [c * x for x in _u_primitive(a)[1]]


def _to_tpoly(a: dict) -> dict:
    """Z[q, t] as {t-exponent: list-in-q}."""
    r: dict = {}
    for (i, j), c in a.items():
        row = r.setdefault(j, [])
        if len(row) <= i:
            row.extend([0] * (i + 1 - len(row)))
        row[i] = c
    return r


def _from_tpoly(p: dict) -> dict:
    return {(i, j): c for j, row in p.items() for i, c in enumerate(row) if c}


def _t_deg(p: dict) -> int:
    return max(p) if p else -1


def _t_content(p: dict) -> list:
    g: list = []
    for row in p.values():
        g = _u_gcd(g, row)
        if len(g) == 1 and abs(g[0]) == 1:
            break
    return g


def _t_divexact_ground(p: dict, c: list) -> dict:
    return {j: _u_divexact(row, c) for j, row in p.items()}


def _t_mul_ground(p: dict, c: list) -> dict:
    return {j: _u_mul(row, c) for j, row in p.items()}


def _t_prem(a: dict, b: dict) -> dict:
    """Pseudo-remainder over Z[q] of polynomials in t."""
    db = _t_deg(b)
    lc = b[db]
    r = {j: list(row) for j, row in a.items()}
    delta = _t_deg(a) - db + 1
    while r and _t_deg(r) >= db:
        dr = _t_deg(r)
        c = r[dr]
        r = {j: _u_mul(row, lc) for j, row in r.items()}
        for j, row in b.items():
            k = j + dr - db
            v = _u_sub(r.get(k, []), _u_mul(c, row))
            if v:
                r[k] = v
            else:
                r.pop(k, None)
        r.pop(dr, None)
        delta -= 1
    if delta > 0:
        f = [1]
        for _ in range(delta):
            f = _u_mul(f, lc)
        r = _t_mul_ground(r, f)
    return {j: row for j, row in r.items() if row}


def _u_pow(a: list, k: int) -> list:
    r = [1]
    for _ in range(k):
        r = _u_mul(r, a)
    return r


def gcd_prs(a: dict, b: dict) -> dict:
    """Deterministic gcd via a subresultant remainder sequence in t over Z[q]."""
    if not a:
        return _normalize_sign(b) if b else {}
    if not b:
        return _normalize_sign(a)
    A, Bp = _to_tpoly(a), _to_tpoly(b)
    ca, cb = _t_content(A), _t_content(Bp)
    cg = _u_gcd(ca, cb)
    A = _t_divexact_ground(A, ca)
    Bp = _t_divexact_ground(Bp, cb)
    if _t_deg(A) < _t_deg(Bp):
        A, Bp = Bp, A
    # subresultant PRS (Brown-Collins coefficient control)
    g, hh = [1], [1]
    while Bp and _t_deg(Bp) > 0:
        d = _t_deg(A) - _t_deg(Bp)
        r = _t_prem(A, Bp)
        if not r:
            A, Bp = Bp, {}
            break
        div = _u_mul(g, _u_pow(hh, d))
        A, Bp = Bp, _t_divexact_ground(r, div)
        g = A[_t_deg(A)]
        if d:
            num = _u_pow(g, d)
            den = _u_pow(hh, d - 1)
            hh = _u_divexact(num, den)
    if Bp:
        # nonzero constant in t: the primitive parts are coprime
        prim: dict = {0: [1]}
    else:
        cA = _t_content(A)
        prim = _t_divexact_ground(A, cA)
    res = _from_tpoly(_t_mul_ground(prim, cg))
    return _normalize_sign(res)


def gcd(a: dict, b: dict) -> dict:
    """Gcd in Z[q, t] with positive leading coefficient (canonical order)."""
    return cofactors(a, b)[0]


def cofactors(a: dict, b: dict) -> tuple[dict, dict, dict]:
    """Return ``(g, a/g, b/g)`` with ``g = gcd(a, b)``."""
    if not a and not b:
        return {}, {}, {}
    if not a:
        g = _normalize_sign(b)
        return g, {}, ({(0, 0): 1} if g is b else {(0, 0): -1})
    if not b:
        g = _normalize_sign(a)
        return g, ({(0, 0): 1} if g is a else {(0, 0): -1}), {}
    if len(a) == 1 or len(b) == 1:
        g0 = igcd(content(a), content(b))
        mi = min(min_exponents(a)[0], min_exponents(b)[0])
        mj = min(min_exponents(a)[1], min_exponents(b)[1])
        g = {(mi, mj): g0}
        return g, divexact(a, g), divexact(b, g)
    res = gcd_heuristic(a, b)
    if res is not None:
        return res
    g = gcd_prs(a, b)
    return g, divexact(a, g), divexact(b, g)


# --------------------------------------------------------------------------
# substitutions


def evaluate(a: dict, q, t):
    """Value at ``(q, t)``; works for ``int`` and ``Fraction`` arguments."""
    total = 0
    for (i, j), c in a.items():
        total += c * q ** i * t ** j
    return total


def subs_t_qk(a: dict, k: int) -> dict:
    r: dict = {}
    for (i, j), c in a.items():
        e = (i + k * j, 0)
        v = r.get(e, 0) + c
        if v:
            r[e] = v
        else:
            r.pop(e, None)
    return r


def reflect(a: dict) -> tuple[dict, tuple[int, int]]:
    """``q -> 1/q, t -> 1/t`` followed by multiplication by ``q**di t**dj``.

    Returns the reflected polynomial and ``(di, dj)``, the maximal degrees,
    so that ``a(1/q, 1/t) = reflected / (q**di t**dj)``.
    """
    di, dj = degrees(a)
    return {(di - i, dj - j): c for (i, j), c in a.items()}, (di, dj)


def to_string(a: dict) -> str:
    if not a:
        return "0"
    parts = []
    for e in sorted(a, key=canonical_key):
        c = a[e]
        i, j = e
        mono = []
        if i:
            mono.append("q" if i == 1 else f"q^{i}")
        if j:
            mono.append("t" if j == 1 else f"t^{j}")
        m = "*".join(mono)
        ac = abs(c)
        if not m:
            body = str(ac)
        elif ac == 1:
            body = m
        else:
            body = f"{ac}*{m}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
