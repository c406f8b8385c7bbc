"""Verification suites shared by the command line and the test-suite.

Each suite returns a :class:`SuiteResult`. A suite stops at the first failed
identity and records it as the counterexample; otherwise it counts checks.
Suites that specialize ``t = q^k`` always run symbolically, because a
random evaluation point cannot also satisfy ``t = q^k`` without making the
eigenvalue differences used to build ``E`` vanish.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .cherednik import reproducing_check, scalar_product
from .hecke import apply_H, apply_H_inv, apply_M, apply_omega, apply_S
from .kernel import (
    check_factorization,
    check_functional,
    decompose_EE,
    decompose_PP,
    expand_kernel,
    u_product_decomposition,
)
from .laurent import LPoly
from .macdonald import compute_E, compute_E_inverted, compute_P, eigenvalue, orbit_step
from .qt_field import SYMBOLIC, QTRat, mono
from .weights import (
    c_lambda,
    coeff_a,
    coeff_a_double_product,
    coeff_a_recurrence_factor,
    coeff_a_root_product,
    coeff_a_sahi,
    coeff_b,
    coeff_f,
    compositions,
    eval_u,
    is_partition,
    norm_closed_form,
    orbit,
    partition_of,
    partitions,
    special_values,
)

__all__ = [
    "SuiteResult",
    "ResourceBound",
    "SUITES",
    "run_suite",
    "random_laurent",
    "relation_corpus",
]


class ResourceBound(RuntimeError):
    """The configured time budget ran out."""


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    checks: int = 0
    counterexample: dict | None = None
    notes: list = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "counterexample": self.counterexample,
            "notes": list(self.notes),
        }


class _Run:
    def __init__(self, name: str, deadline: float | None):
        self.res = SuiteResult(name)
        self.deadline = deadline

    def check(self, ok: bool, identity: str, left=None, right=None, **where) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceBound(f"time limit reached in suite {self.res.suite}")
        self.res.checks += 1
        if not ok and self.res.passed:
            self.res.passed = False
            self.res.counterexample = {
                "identity": identity,
                "where": {k: _jsonable(v) for k, v in where.items()},
                "left": _text(left),
                "right": _text(right),
            }
        return ok


def _jsonable(v):
    if isinstance(v, tuple):
        return list(v)
    return v


def _text(v) -> str | None:
    if v is None:
        return None
    if isinstance(v, LPoly):
        return v.to_text()
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def _deadline(limit):
    return None if limit is None else time.monotonic() + limit


# --------------------------------------------------------------------------
# random test polynomials


def random_laurent(rng: random.Random, n: int, nterms: int = 4, lo: int = -2, hi: int = 3) -> LPoly:
    """A small Laurent polynomial with simple coefficients in Q(q, t)."""
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(lo, hi) for _ in range(n))
        kind = rng.randrange(3)
        if kind == 0:
            c = QTRat(rng.choice([-3, -2, -1, 1, 2, 3]))
        elif kind == 1:
            c = mono(rng.randint(-1, 2), rng.randint(-1, 2), rng.choice([-2, -1, 1, 2]))
        else:
            c = (1 - mono(rng.randint(0, 2), rng.randint(0, 1))) / (1 - mono(rng.randint(1, 2), rng.randint(0, 2)))
        terms[e] = c
    return LPoly(n, terms)


def relation_corpus(n: int, size: int = 20, seed: int = 20240601) -> list[LPoly]:
    rng = random.Random(seed * 31 + n)
    return [random_laurent(rng, n) for _ in range(size)]


def _coerced(f: LPoly, field) -> LPoly:
    if field.symbolic:
        return f
    return f.map_coeffs(field.coerce)


# --------------------------------------------------------------------------
# suites


def suite_eigen(n: int, D: int, field=SYMBOLIC, time_limit=None, **_) -> SuiteResult:
    run = _Run("eigen", _deadline(time_limit))
    for d in range(D + 1):
        for lam in compositions(d, n):
            E = compute_E(lam, field).poly
            if not run.check(E.coeff(lam) == 1, "monic", E.coeff(lam), 1, lam=lam):
                return run.res
            for i in range(1, n + 1):
                left = apply_M(i, E, field)
                right = E.scale(eigenvalue(lam, i, field))
                if not run.check(left == right, "M-eigenvector", left, right, lam=lam, i=i):
                    return run.res
            if field.symbolic and n > 1:
                for i in range(1, n):
                    if lam[i - 1] != lam[i]:
                        mu = lam[:i - 1] + (lam[i], lam[i - 1]) + lam[i + 1:]
                        got = orbit_step(compute_E(lam, field), i, field).poly
                        if not run.check(got == compute_E(mu, field).poly, "orbit-step", got,
                                         compute_E(mu, field).poly, lam=lam, i=i):
                            return run.res
        # symmetric combination of the M_i on P_lam
        if n > 1:
            for lam in partitions(d, n):
                P = compute_P(lam, field).poly
                left = LPoly.zero(n)
                for i in range(1, n + 1):
                    left = left + apply_M(i, P, field).scale(field.mono(0, i - 1))
                ev = field.zero
                for i in range(1, n + 1):
                    ev = ev + field.mono(lam[i - 1], n - i)
                if not run.check(left == P.scale(ev), "symmetric-eigenvalue", left, P.scale(ev), lam=lam):
                    return run.res
    return run.res


def suite_relations(n: int, field=SYMBOLIC, time_limit=None, size: int = 20, **_) -> SuiteResult:
    run = _Run("relations", _deadline(time_limit))
    if n < 2:
        run.res.notes.append("no Hecke generators for n = 1")
    t = field.t
    for idx, f0 in enumerate(relation_corpus(n, size)):
        f = _coerced(f0, field)
        for i in range(1, n):
            Hf = apply_H(i, f, field)
            left = apply_H(i, Hf, field)
            right = Hf.scale(t - 1) + f.scale(t)
            if not run.check(left == right, "quadratic", left, right, poly=idx, i=i):
                return run.res
            back = apply_H(i, apply_H_inv(i, f, field), field)
            if not run.check(back == f, "inverse", back, f, poly=idx, i=i):
                return run.res
        for i in range(1, n - 1):
            left = apply_H(i, apply_H(i + 1, apply_H(i, f, field), field), field)
            right = apply_H(i + 1, apply_H(i, apply_H(i + 1, f, field), field), field)
            if not run.check(left == right, "braid", left, right, poly=idx, i=i):
                return run.res
        for i, j in combinations(range(1, n + 1), 2):
            left = apply_M(i, apply_M(j, f, field), field)
            right = apply_M(j, apply_M(i, f, field), field)
            if not run.check(left == right, "M-commute", left, right, poly=idx, i=i, j=j):
                return run.res
        # omega = s_{n-1} ... s_1 tau_1 = tau_n s_{n-1} ... s_1
        w = apply_omega(1, f, field)
        g = f.qshift(1, 1, field)
        for i in range(1, n):
            g = apply_S(i, g)
        h = f
        for i in range(1, n):
            h = apply_S(i, h)
        h = h.qshift(n, 1, field)
        if not run.check(w == g == h, "omega-factorization", w, g, poly=idx):
            return run.res
        if not run.check(apply_omega(-1, w, field) == f, "omega-inverse", poly=idx):
            return run.res
    return run.res


def suite_cauchy(n: int, D: int, field=SYMBOLIC, time_limit=None, **_) -> SuiteResult:
    run = _Run("cauchy", _deadline(time_limit))
    K = expand_kernel(n, D, "E_kernel", field)
    for d in range(D + 1):
        comp = K.component(d)
        bad = [e for e in comp.terms if sum(e[n:]) != d]
        if not run.check(not bad, "bidegree", d=d):
            return run.res
        got = decompose_EE(K, d)
        for lam in compositions(d, n):
            exp = field.coerce(coeff_a(lam))
            if not run.check(got[lam] == exp, "E-kernel coefficient", got[lam], exp, lam=lam):
                return run.res
    KP = expand_kernel(n, D, "Pi_kernel", field)
    for d in range(D + 1):
        got = decompose_PP(KP, d)
        for lam in partitions(d, n):
            exp = field.coerce(coeff_b(lam))
            if not run.check(got[lam] == exp, "Pi-kernel coefficient", got[lam], exp, lam=lam):
                return run.res
    rep = check_factorization(n, D, field)
    run.check(rep.passed, "kernel factorization", rep.detail.get("left"), rep.detail.get("right"))
    if field.symbolic and run.res.passed:
        comb = combinatorial_identities(n, D, time_limit=None)
        run.res.checks += comb.checks
        if not comb.passed:
            run.res.passed = False
            run.res.counterexample = comb.counterexample
    return run.res


def combinatorial_identities(n: int, D: int, time_limit=None) -> SuiteResult:
    """Alternative expressions for ``a_lam`` on all compositions up to degree D."""
    run = _Run("combinatorics", _deadline(time_limit))
    for d in range(D + 1):
        for mu in compositions(d, n):
            a = coeff_a(mu)
            r = coeff_a_root_product(mu)
            if not run.check(a == r, "orbit root product", a, r, lam=mu):
                return run.res
            s = coeff_a_sahi(mu)
            if not run.check(a == s, "d/d' orbit ratio", a, s, lam=mu):
                return run.res
            if is_partition(mu):
                dp = coeff_a_double_product(mu)
                if not run.check(a == dp, "double product", a, dp, lam=mu):
                    return run.res
                for m in range(1, n + 1):
                    if any(mu[m:]):
                        continue
                    bigger = tuple(v + 1 if i < m else v for i, v in enumerate(mu))
                    left = coeff_a(bigger)
                    right = a * coeff_a_recurrence_factor(mu, m)
                    if not run.check(left == right, "column recurrence", left, right, lam=mu, m=m):
                        return run.res
    return run.res


def suite_orthogonality(n: int, D: int, ks=(1, 2), time_limit=None, **_) -> SuiteResult:
    run = _Run("orthogonality", _deadline(time_limit))
    lams = [lam for d in range(D + 1) for lam in compositions(d, n)]
    for k in ks:
        products = {}
        for lam in lams:
            E = compute_E(lam).poly
            for mu in lams:
                v = scalar_product(E, compute_E(mu).poly, n, k)
                if lam != mu:
                    if not run.check(not v, "orthogonality", v, 0, lam=lam, mu=mu, k=k):
                        return run.res
                    continue
                exp = norm_closed_form(lam, k=k)
                if not run.check(v == exp, "norm", v, exp, lam=lam, k=k):
                    return run.res
                products[lam] = coeff_a(lam).specialize_t(k) * v
        for lam in lams:
            lp = partition_of(lam)
            if lam == lp:
                exp = c_lambda(lam, k)
                if not run.check(products[lam] == exp, "coefficient-norm product", products[lam], exp,
                                 lam=lam, k=k):
                    return run.res
            elif not run.check(products[lam] == products[lp], "orbit constancy", products[lam],
                               products[lp], lam=lam, k=k):
                return run.res
    return run.res


def suite_reproducing(n: int, D: int, ks=(1,), time_limit=None, extra: int = 2, **_) -> SuiteResult:
    """Reproducing identity for every ``|lam| <= D`` with truncation ``|lam| + extra``."""
    run = _Run("reproducing", _deadline(time_limit))
    for k in ks:
        for d in range(D + 1):
            for lam in compositions(d, n):
                rep = reproducing_check(lam, n, k, d + extra)
                if not run.check(rep.passed, "reproducing kernel", rep.left, rep.right, lam=lam, k=k):
                    return run.res
    return run.res


def suite_specialization(n: int, D: int, field=SYMBOLIC, time_limit=None, **_) -> SuiteResult:
    run = _Run("specialization", _deadline(time_limit))
    tdelta = [field.mono(0, n - 1 - j) for j in range(n)]
    tmdelta = [field.mono(0, -(n - 1 - j)) for j in range(n)]
    qtn = field.mono(1, n)
    for d in range(D + 1):
        for lam in partitions(d, n):
            Ebar = compute_E_inverted(lam, field).poly.evaluate(tdelta)
            closed = field.coerce(special_values(lam, "E_at_t_delta_inverted"))
            if not run.check(Ebar == closed, "E inverted at t^delta", Ebar, closed, lam=lam):
                return run.res
            Em = compute_E(lam, field).poly.evaluate(tmdelta)
            closed_m = field.coerce(special_values(lam, "E_at_t_minus_delta"))
            if not run.check(Em == closed_m, "E at t^-delta", Em, closed_m, lam=lam):
                return run.res
            f_val = eval_u([field.coerce(c) for c in coeff_f(lam)], qtn)
            right = field.coerce(coeff_a(lam)) * Ebar
            if not run.check(f_val == right, "f(q t^n) = a E(t^delta)", f_val, right, lam=lam):
                return run.res
            for m in (n, n + 1):
                lam_m = lam + (0,) * (m - n)
                P = compute_P(lam_m, field).poly
                val = P.evaluate([field.mono(0, j) for j in range(m)])
                exp = field.coerce(special_values(lam_m, "P_principal", m))
                if not run.check(val == exp, "P principal specialization", val, exp, lam=lam, m=m):
                    return run.res
        # orbit version: f_{mu+}(q t^n) a_{mu+, mu} = a_mu E_mu(t^delta | 1/q, 1/t)
        for lam in partitions(d, n):
            Pc = compute_P(lam, field).e_coefficients
            f_val = eval_u([field.coerce(c) for c in coeff_f(lam)], qtn)
            for mu in orbit(lam):
                left = f_val * Pc[mu]
                right = field.coerce(coeff_a(mu)) * compute_E_inverted(mu, field).poly.evaluate(tdelta)
                if not run.check(left == right, "orbit specialization", left, right, lam=mu):
                    return run.res
    got = u_product_decomposition(n, D, field)
    for lam, coeffs in got.items():
        exp = [field.coerce(c) for c in coeff_f(lam)]
        if not run.check(coeffs == exp, "u-product decomposition", coeffs, exp, lam=lam):
            return run.res
    K = expand_kernel(n, D, "E_kernel", field)
    rep = check_functional(K, "specialize_tdelta")
    run.check(rep.passed, "kernel at t^delta", rep.detail.get("left"), rep.detail.get("right"))
    return run.res


def suite_lemma24(n: int, D: int, field=SYMBOLIC, time_limit=None, **_) -> SuiteResult:
    run = _Run("lemma24", _deadline(time_limit))
    K = expand_kernel(n, D, "E_kernel", field)
    for i in range(1, n):
        rep = check_functional(K, "hecke_symmetry", i)
        if not run.check(rep.passed, "H_x K = H_y K", rep.detail.get("left"), rep.detail.get("right"), i=i,
                         degree=rep.detail.get("degree")):
            return run.res
    rep = check_functional(K, "omega_exchange")
    run.check(rep.passed, "omega_x K = omega_y^-1 K", rep.detail.get("left"), rep.detail.get("right"),
              degree=rep.detail.get("degree"))
    return run.res


SUITES = {
    "cauchy": suite_cauchy,
    "eigen": suite_eigen,
    "relations": suite_relations,
    "orthogonality": suite_orthogonality,
    "reproducing": suite_reproducing,
    "specialization": suite_specialization,
    "lemma24": suite_lemma24,
}

# suites that need t = q^k and therefore ignore fastcheck
EXACT_ONLY = {"orthogonality", "reproducing"}


def run_suite(name: str, n: int, D: int, k: int | None = None, field=SYMBOLIC,
              time_limit: float | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    kw = {"time_limit": time_limit}
    if name in EXACT_ONLY:
        kw["ks"] = (k,) if k is not None else ((1, 2) if name == "orthogonality" else (1,))
        res = SUITES[name](n, D, **kw)
        if not field.symbolic:
            res.notes.append("runs symbolically: t = q^k cannot be screened at a random point")
        return res
    if name == "relations":
        return suite_relations(n, field=field, **kw)
    return SUITES[name](n, D, field=field, **kw)
