"""Truncated Cauchy kernels and their decompositions.

Kernels live in a ``2n``-variable ring, ``x`` in positions ``0..n-1`` and
``y`` in ``n..2n-1``. Every factor is a q-binomial series in one product
``x_i y_j``, so each kernel is bihomogeneous and truncating at x-degree ``D``
is exact on the retained components.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .hecke import apply_H, apply_omega
from .laurent import LPoly, _accumulate
from .linalg import solve
from .macdonald import compute_E, compute_E_inverted, compute_P
from .qt_field import SYMBOLIC
from .weights import coeff_a, coeff_b, coeff_f, compositions, partitions

__all__ = [
    "TruncKernel",
    "CheckReport",
    "qbinomial_coeffs",
    "qbinomial_series",
    "expand_kernel",
    "decompose_EE",
    "decompose_PP",
    "check_functional",
    "check_factorization",
    "u_product_decomposition",
    "substitute_block",
    "cauchy_expected",
    "pi_expected",
    "u_product_expected",
]


@dataclass(frozen=True)
class TruncKernel:
    n: int
    D: int
    which: str
    components: tuple
    field: object = SYMBOLIC

    def component(self, d: int) -> LPoly:
        if not 0 <= d <= self.D:
            raise ValueError(f"component {d} outside 0..{self.D}")
        return self.components[d]

    def total(self) -> LPoly:
        r = LPoly.zero(2 * self.n)
        for c in self.components:
            r = r + c
        return r


@dataclass
class CheckReport:
    name: str
    passed: bool
    checked: int = 0
    detail: dict = dc_field(default_factory=dict)


def qbinomial_coeffs(a_exp: tuple[int, int], D: int, field=SYMBOLIC,
                     scale_exp: tuple[int, int] = (0, 0)) -> list:
    """``[(a;q)_l / (q;q)_l * s^l for l in 0..D]`` with ``a = q^a0 t^a1``
    and ``s = q^s0 t^s1``."""
    out = [field.one]
    a = field.mono(*a_exp)
    s = field.mono(*scale_exp)
    c = field.one
    for l in range(1, D + 1):
        c = c * (1 - a * field.mono(l - 1, 0)) / (1 - field.mono(l, 0)) * s
        out.append(c)
    return out


def qbinomial_series(a_exp: tuple[int, int], z_scale: tuple[int, int], D: int, field=SYMBOLIC) -> LPoly:
    """The truncated series ``sum_l (a;q)_l/(q;q)_l (s z)^l`` as a polynomial in z."""
    cs = qbinomial_coeffs(a_exp, D, field, z_scale)
    return LPoly(1, {(l,): c for l, c in enumerate(cs)})


def _times_pair_series(f: dict, pos_x: int, pos_y: int, coeffs: Sequence, n: int, D: int,
                       y_sign: int = 1) -> dict:
    """Multiply by ``sum_l coeffs[l] (x_i y_j^(y_sign))^l``, dropping x-degree > D."""
    out: dict = {}
    for e, c in f.items():
        dx = sum(e[:n])
        for l in range(0, D - dx + 1):
            cl = coeffs[l]
            if not cl:
                continue
            if l:
                g = list(e)
                g[pos_x] += l
                g[pos_y] += y_sign * l
                g = tuple(g)
            else:
                g = e
            _accumulate(out, g, c * cl if l else c)
    return out


def _kernel_factors(n: int, which: str):
    """``(i, j, a_exp, scale_exp)`` for each factor, 0-based i, j."""
    for i in range(n):
        for j in range(n):
            if which == "Pi_kernel":
                yield i, j, (0, 1), (0, 0)
            elif which == "E_kernel":
                if j < i:
                    # (q t z; q)_inf / (q z; q)_inf with z = x_i y_j
                    yield i, j, (0, 1), (1, 0)
                elif i == j:
                    yield i, j, (1, 1), (0, 0)
                else:
                    yield i, j, (0, 1), (0, 0)
            else:
                raise ValueError(f"unknown kernel {which!r}")


def _split(total: dict, n: int, D: int) -> tuple:
    comps = [dict() for _ in range(D + 1)]
    for e, c in total.items():
        comps[sum(e[:n])][e] = c
    return tuple(LPoly._raw(2 * n, comp) for comp in comps)


def expand_kernel(n: int, D: int, which: str = "E_kernel", field=SYMBOLIC) -> TruncKernel:
    """Truncation of ``E(x;y)`` (``which="E_kernel"``) or ``Pi(x;y)`` at x-degree D."""
    if n < 1 or D < 0:
        raise ValueError("need n >= 1 and D >= 0")
    f = {(0,) * (2 * n): field.one}
    for i, j, a_exp, s_exp in _kernel_factors(n, which):
        f = _times_pair_series(f, i, n + j, qbinomial_coeffs(a_exp, D, field, s_exp), n, D)
    return TruncKernel(n, D, which, _split(f, n, D), field)


def _tensor(fx: LPoly, gy: LPoly) -> LPoly:
    n = fx.nvars
    out = {}
    for e1, c1 in fx.terms.items():
        for e2, c2 in gy.terms.items():
            out[e1 + e2] = c1 * c2
    return LPoly._raw(2 * n, out)


def _decompose(target: LPoly, basis: list[LPoly]) -> list:
    monos = set(target.terms)
    for b in basis:
        monos.update(b.terms)
    rows, rhs = [], []
    for m in sorted(monos):
        rows.append([b.coeff(m) for b in basis])
        rhs.append(target.coeff(m))
    return solve(rows, rhs)


def decompose_EE(K: TruncKernel, d: int) -> dict:
    """Coefficients of component ``d`` in the basis ``E_lam(x) E_lam(y | 1/q, 1/t)``."""
    if K.which != "E_kernel":
        raise ValueError("decompose_EE needs the E kernel")
    lams = list(compositions(d, K.n))
    basis = [_tensor(compute_E(l, K.field).poly, compute_E_inverted(l, K.field).poly) for l in lams]
    return dict(zip(lams, _decompose(K.component(d), basis)))


def decompose_PP(K: TruncKernel, d: int) -> dict:
    """Coefficients of component ``d`` in the basis ``P_lam(x) P_lam(y)``."""
    if K.which != "Pi_kernel":
        raise ValueError("decompose_PP needs the Pi kernel")
    lams = list(partitions(d, K.n))
    basis = []
    for l in lams:
        P = compute_P(l, K.field).poly
        basis.append(_tensor(P, P))
    return dict(zip(lams, _decompose(K.component(d), basis)))


def substitute_block(f: LPoly, start: int, values: Sequence) -> LPoly:
    """Substitute ``values`` for the variables ``start..start+len(values)-1``."""
    stop = start + len(values)
    out: dict = {}
    for e, c in f.terms.items():
        v = c
        for a, p in zip(e[start:stop], values):
            if a:
                v = v * p ** a
        _accumulate(out, e[:start] + e[stop:], v)
    return LPoly._raw(f.nvars - len(values), out)


def _k_form(comp: LPoly, n: int) -> LPoly:
    """``K(x;y) = E(x; 1/y)`` on one component."""
    return comp.invert_vars(range(n + 1, 2 * n + 1))


def _first_mismatch(a: LPoly, b: LPoly):
    diff = a - b
    if not diff:
        return None
    e = max(diff.terms)
    return {"monomial": e, "left": str(a.coeff(e)), "right": str(b.coeff(e))}


def check_functional(K: TruncKernel, which: str, i: int | None = None) -> CheckReport:
    """Series-level functional equations of the kernel.

    ``hecke_symmetry``: ``H_{i,x} K = H_{i,y} K`` for ``K(x;y) = E(x;1/y)``.
    ``omega_exchange``: ``omega_x K = omega_y^-1 K``.
    ``specialize_tdelta``: ``E(x; t^(n-1), ..., 1)`` against the product of
    one-variable q-binomial series with ``a = q t^n``.
    """
    if K.which != "E_kernel":
        raise ValueError("functional checks are stated for the E kernel")
    n, fld = K.n, K.field
    name = which if i is None else f"{which}({i})"
    if which in ("hecke_symmetry", "omega_exchange"):
        if which == "hecke_symmetry" and (i is None or not 1 <= i < n):
            raise ValueError(f"hecke_symmetry needs 1 <= i < {n}")
        for d, comp in enumerate(K.components):
            Kd = _k_form(comp, n)
            if which == "hecke_symmetry":
                lhs = apply_H(i, Kd, fld, offset=0, n=n)
                rhs = apply_H(i, Kd, fld, offset=n, n=n)
            else:
                lhs = apply_omega(1, Kd, fld, offset=0, n=n)
                rhs = apply_omega(-1, Kd, fld, offset=n, n=n)
            bad = _first_mismatch(lhs, rhs)
            if bad is not None:
                bad["degree"] = d
                return CheckReport(name, False, d + 1, bad)
        return CheckReport(name, True, len(K.components))
    if which == "specialize_tdelta":
        point = [fld.mono(0, n - 1 - j) for j in range(n)]
        at_point = LPoly.zero(n)
        for comp in K.components:
            at_point = at_point + substitute_block(comp, n, point)
        target = {(0,) * n: fld.one}
        coeffs = qbinomial_coeffs((1, n), K.D, fld)
        for j in range(n):
            target = _times_pair_series_1(target, j, coeffs, K.D)
        target = LPoly._raw(n, target)
        bad = _first_mismatch(at_point, target)
        return CheckReport(name, bad is None, K.D + 1, bad or {})
    raise ValueError(f"unknown functional check {which!r}")


def _times_pair_series_1(f: dict, pos: int, coeffs: Sequence, D: int) -> dict:
    out: dict = {}
    for e, c in f.items():
        dx = sum(e)
        for l in range(0, D - dx + 1):
            g = list(e)
            g[pos] += l
            _accumulate(out, tuple(g), c * coeffs[l])
    return out


def check_factorization(n: int, D: int, field=SYMBOLIC) -> CheckReport:
    """E kernel equals the Pi kernel times the expansion of the rational factor
    ``prod_i 1/(1 - t x_i y_i) prod_{j<i} (1 - x_i y_j)/(1 - t x_i y_j)``."""
    E = expand_kernel(n, D, "E_kernel", field).total()
    f = dict(expand_kernel(n, D, "Pi_kernel", field).total().terms)
    t = field.t
    geo = [t ** l for l in range(D + 1)]
    ratio = [field.one] + [t ** l - t ** (l - 1) for l in range(1, D + 1)]
    for i in range(n):
        f = _times_pair_series(f, i, n + i, geo, n, D)
        for j in range(i):
            f = _times_pair_series(f, i, n + j, ratio, n, D)
    prod = LPoly._raw(2 * n, f)
    bad = _first_mismatch(E, prod)
    return CheckReport("factorization", bad is None, D + 1, bad or {})


def u_product_decomposition(n: int, D: int, field=SYMBOLIC) -> dict:
    """Decompose ``prod_i (u x_i;q)_inf / (x_i;q)_inf`` over ``P_lam``.

    ``u`` is carried as an extra variable. Returns, for each partition of
    each degree ``d <= D``, the list of coefficients of powers of ``u``.
    """
    # (u;q)_l / (q;q)_l as a polynomial in u, coefficient lists
    polys = [[field.one]]
    for l in range(1, D + 1):
        prev = polys[-1]
        shift = field.mono(l - 1, 0)
        den = 1 - field.mono(l, 0)
        new = [field.zero] * (len(prev) + 1)
        for k, c in enumerate(prev):
            new[k] = new[k] + c / den
            new[k + 1] = new[k + 1] - c * shift / den
        polys.append(new)
    f = {(0,) * (n + 1): field.one}
    for j in range(n):
        out: dict = {}
        for e, c in f.items():
            dx = sum(e[:n])
            for l in range(0, D - dx + 1):
                for k, cu in enumerate(polys[l]):
                    if cu:
                        g = list(e)
                        g[j] += l
                        g[n] += k
                        _accumulate(out, tuple(g), c * cu)
        f = out
    result: dict = {}
    for d in range(D + 1):
        lams = list(partitions(d, n))
        Ps = [compute_P(l, field).poly for l in lams]
        per_u: dict = {}
        for e, c in f.items():
            if sum(e[:n]) == d:
                per_u.setdefault(e[n], {})[e[:n]] = c
        top = max(per_u, default=0)
        for lam in lams:
            result[lam] = [field.zero] * (top + 1)
        for k, terms in per_u.items():
            sol = _decompose(LPoly._raw(n, terms), Ps)
            for lam, c in zip(lams, sol):
                result[lam][k] = c
        for lam in lams:
            while len(result[lam]) > 1 and not result[lam][-1]:
                result[lam].pop()
    return result


def cauchy_expected(n: int, d: int) -> dict:
    """Closed-form coefficients matching :func:`decompose_EE`."""
    return {lam: coeff_a(lam) for lam in compositions(d, n)}


def pi_expected(n: int, d: int) -> dict:
    return {lam: coeff_b(lam) for lam in partitions(d, n)}


def u_product_expected(n: int, D: int) -> dict:
    return {lam: coeff_f(lam) for d in range(D + 1) for lam in partitions(d, n)}
