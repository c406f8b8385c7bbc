"""Nonsymmetric Macdonald polynomials ``E_lam`` and symmetric ``P_lam``.

``E_lam`` is the monic joint eigenvector of the operators ``M_i`` with
eigenvalues ``xi_i(lam) = q^(lam_i) t^(n-i-k_lam(i))``. Since every ``M_i`` is
triangular on monomials, the coefficients are found one at a time going down
a linear extension of the order: for each monomial ``x^mu`` pick the first
``i`` with ``xi_i(mu) != xi_i(lam)`` and read off ``c_mu`` from the ``x^mu``
coefficient of ``(M_i - xi_i(lam)) E = 0``.

All functions accept ``field=`` (symbolic by default). Results are memoized
per ``(lam, field)``; records are immutable in practice, do not mutate them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .hecke import apply_H, apply_M, apply_S
from .laurent import LPoly
from .linalg import solve
from .qt_field import SYMBOLIC
from .weights import (
    as_composition,
    compositions,
    dominates,
    is_partition,
    k_vector,
    orbit,
    partition_of,
    preceq_compare,
    spectral_vector,
)

__all__ = [
    "EPolyRecord",
    "PRecord",
    "lower_basis",
    "compute_E",
    "compute_E_inverted",
    "orbit_step",
    "compute_P",
    "eigenvalue",
]


@dataclass(frozen=True)
class EPolyRecord:
    lam: tuple[int, ...]
    poly: LPoly
    spectral: tuple[tuple[int, int], ...]
    inverted: bool = False

    def coefficients(self) -> dict:
        return dict(self.poly.terms)


@dataclass(frozen=True)
class PRecord:
    lam: tuple[int, ...]
    poly: LPoly
    # coefficients of E_mu in P_lam, mu over the orbit of lam
    e_coefficients: dict


def eigenvalue(lam: Sequence[int], i: int, field=SYMBOLIC):
    """``xi_i(lam)`` as a field element (``i`` 1-based)."""
    a, b = spectral_vector(lam)[i - 1]
    return field.mono(a, b)


def _basis_key(mu):
    return (partition_of(mu), mu)


def lower_basis(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Compositions ``mu`` of ``|lam|`` with ``mu+ <= lam+``, largest first.

    Sorted by ``mu+`` then ``mu``, both lex descending; this is a linear
    extension of the triangularity order read downward.
    """
    lam = as_composition(lam)
    lp = partition_of(lam)
    out = [mu for mu in compositions(sum(lam), len(lam)) if dominates(lp, partition_of(mu))]
    return sorted(out, key=_basis_key, reverse=True)


@lru_cache(maxsize=None)
def _M_mono(i: int, mu: tuple, field) -> dict:
    return apply_M(i, LPoly.monomial(mu), field).terms


@lru_cache(maxsize=None)
def _compute_E(lam: tuple, field) -> EPolyRecord:
    n = len(lam)
    sv = spectral_vector(lam)
    basis = [mu for mu in lower_basis(lam) if mu == lam or preceq_compare(mu, lam) == "less"]
    xi_lam = [field.mono(a, b) for a, b in sv]
    images: list[dict] = [{} for _ in range(n)]  # M_i applied to the part found so far
    coeffs: dict = {}

    def absorb(mu, c):
        for i in range(n):
            img = images[i]
            for e, v in _M_mono(i + 1, mu, field).items():
                w = img.get(e, 0) + v * c
                if w:
                    img[e] = w
                else:
                    img.pop(e, None)

    for mu in basis:
        if mu == lam:
            c = field.one
        else:
            smu = spectral_vector(mu)
            i = next((j for j in range(n) if smu[j] != sv[j]), None)
            if i is None:
                raise AssertionError(f"spectral vectors of {mu} and {lam} coincide")
            num = images[i].get(mu, 0)
            if not num:
                continue
            c = num / (xi_lam[i] - field.mono(*smu[i]))
        coeffs[mu] = c
        absorb(mu, c)
    return EPolyRecord(lam, LPoly(n, coeffs), sv, getattr(field, "is_inverted", False))


def compute_E(lam: Sequence[int], field=SYMBOLIC) -> EPolyRecord:
    """The nonsymmetric Macdonald polynomial ``E_lam(x | q, t)``."""
    lam = as_composition(lam)
    if not lam:
        raise ValueError("empty composition")
    return _compute_E(lam, field)


@lru_cache(maxsize=None)
def _compute_E_inverted(lam: tuple, field) -> EPolyRecord:
    if field.symbolic and not field.is_inverted:
        rec = _compute_E(lam, field)
        return EPolyRecord(lam, rec.poly.map_coeffs(field.invert), rec.spectral, True)
    rec = _compute_E(lam, field.inverted())
    return EPolyRecord(lam, rec.poly, rec.spectral, True)


def compute_E_inverted(lam: Sequence[int], field=SYMBOLIC) -> EPolyRecord:
    """``E_lam(x | 1/q, 1/t)``.

    Symbolically this maps the parameter inversion over the coefficients of
    ``E_lam``; in fastcheck mode it recomputes ``E_lam`` at the inverted point.
    """
    lam = as_composition(lam)
    if not lam:
        raise ValueError("empty composition")
    return _compute_E_inverted(lam, field)


def orbit_step(rec: EPolyRecord, i: int, field=SYMBOLIC) -> EPolyRecord:
    """``E_{s_i lam}`` from ``E_lam`` via ``H_i E_lam = u E_lam + v E_{s_i lam}``."""
    lam = rec.lam
    n = len(lam)
    if not 1 <= i < n:
        raise ValueError(f"index {i} outside 1..{n - 1}")
    a = lam[i - 1] - lam[i]
    if a == 0:
        raise ValueError(f"s_{i} fixes {lam}; H_{i} acts on E_lam by t")
    k = k_vector(lam)
    b = k[i] - k[i - 1]
    t = field.t
    u = (t - 1) / (1 - field.mono(-a, -b))
    if a < 0:
        v = t
    else:
        v = (1 - field.mono(a, b + 1)) * (1 - field.mono(a, b - 1)) / (1 - field.mono(a, b)) ** 2
    new = (apply_H(i, rec.poly, field) - rec.poly.scale(u)).scale(1 / v)
    mu = lam[:i - 1] + (lam[i], lam[i - 1]) + lam[i + 1:]
    if new.coeff(mu) != 1:
        raise AssertionError(f"orbit step from {lam} did not give a monic E_{mu}")
    return EPolyRecord(mu, new, spectral_vector(mu), rec.inverted)


@lru_cache(maxsize=None)
def _compute_P(lam: tuple, field) -> PRecord:
    n = len(lam)
    others = [mu for mu in orbit(lam) if mu != lam]
    Es = {mu: compute_E(mu, field).poly for mu in orbit(lam)}
    if not others:
        return PRecord(lam, Es[lam], {lam: field.one})
    # rows: coefficient of each monomial in s_i P - P for each i
    diffs = {mu: [apply_S(i, Es[mu]) - Es[mu] for i in range(1, n)] for mu in Es}
    rows, rhs = [], []
    for i in range(n - 1):
        monos = set()
        for mu in Es:
            monos.update(diffs[mu][i].terms)
        for m in sorted(monos):
            rows.append([diffs[mu][i].coeff(m) for mu in others])
            rhs.append(-diffs[lam][i].coeff(m))
    sol = solve(rows, rhs)
    coeffs = {lam: field.one}
    coeffs.update(zip(others, sol))
    P = Es[lam]
    for mu, c in zip(others, sol):
        P = P + Es[mu].scale(c)
    return PRecord(lam, P, coeffs)


def compute_P(lam: Sequence[int], field=SYMBOLIC) -> PRecord:
    """Symmetric ``P_lam`` as the s_i-invariant combination of ``E_mu``, mu in the orbit."""
    lam = as_composition(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return _compute_P(lam, field)
