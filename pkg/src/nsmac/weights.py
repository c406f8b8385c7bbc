"""Compositions, partitions and the closed-form coefficients built from them.

Compositions are plain tuples of nonnegative ints. Boxes are 1-based
``(row, column)`` pairs, row ``i`` having ``lam[i-1]`` boxes.

The t-exponent bookkeeping never uses half integers: instead of ``rho(lam)``
we expose ``k_lam(i)``, with ``<eps_i, rho(lam)> = (n-1)/2 - k_lam(i)``, so
every pairing ``<eps_i - eps_j, rho(lam)> = k_lam(j) - k_lam(i)`` is an int.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from .qt_field import QTRat, mono, product, qpoch

__all__ = [
    "DiagramBox",
    "as_composition",
    "is_partition",
    "partition_of",
    "dominates",
    "preceq_compare",
    "compositions",
    "partitions",
    "orbit",
    "k_vector",
    "spectral_vector",
    "rho_pairing",
    "diagram_stats",
    "n_of",
    "coeff_a",
    "coeff_a_parts",
    "coeff_a_root_product",
    "coeff_a_sahi",
    "coeff_a_double_product",
    "coeff_a_recurrence_factor",
    "coeff_b",
    "coeff_f",
    "eval_u",
    "norm_closed_form",
    "norm_ratio",
    "c_lambda",
    "special_values",
]


def as_composition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(v) for v in lam)
    if any(v < 0 for v in lam):
        raise ValueError(f"composition {lam} has a negative part")
    return lam


def is_partition(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def _require_partition(lam) -> tuple[int, ...]:
    lam = as_composition(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


def partition_of(lam: Sequence[int]) -> tuple[int, ...]:
    """``lam+``, the parts sorted in decreasing order (length kept)."""
    return tuple(sorted(lam, reverse=True))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam >= mu`` in dominance order (same size assumed)."""
    s1 = s2 = 0
    for a, b in zip(lam, mu):
        s1 += a
        s2 += b
        if s1 < s2:
            return False
    return True


def _preceq(mu, lam) -> bool:
    mp, lp = partition_of(mu), partition_of(lam)
    if mp != lp:
        return dominates(lp, mp)
    return dominates(lam, mu)


def preceq_compare(mu: Sequence[int], lam: Sequence[int]) -> str:
    """Compare two compositions in the partial order used for triangularity."""
    mu, lam = as_composition(mu), as_composition(lam)
    if len(mu) != len(lam) or sum(mu) != sum(lam):
        return "incomparable"
    if mu == lam:
        return "equal"
    if _preceq(mu, lam):
        return "less"
    if _preceq(lam, mu):
        return "greater"
    return "incomparable"


def compositions(d: int, n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``d`` into ``n`` parts, lex descending."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in compositions(d - a, n - 1):
            yield (a,) + rest


def partitions(d: int, n: int, top: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``d`` padded with zeros to length ``n``, lex descending."""
    top = d if top is None else top
    if n == 0:
        if d == 0:
            yield ()
        return
    for a in range(min(d, top), -1, -1):
        if a * n < d:
            break
        for rest in partitions(d - a, n - 1, a):
            yield (a,) + rest


def orbit(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct rearrangements of ``lam``, lex descending."""
    return sorted(set(permutations(lam)), reverse=True)


# --------------------------------------------------------------------------
# spectral data


def k_vector(lam: Sequence[int]) -> tuple[int, ...]:
    n = len(lam)
    return tuple(
        sum(1 for j in range(i) if lam[j] >= lam[i]) + sum(1 for j in range(i + 1, n) if lam[j] > lam[i])
        for i in range(n)
    )


def spectral_vector(lam: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Exponent pairs of ``xi_i(lam) = q^(lam_i) t^(n-i-k_lam(i))`` (i 1-based)."""
    n = len(lam)
    k = k_vector(lam)
    return tuple((lam[i], n - 1 - i - k[i]) for i in range(n))


def rho_pairing(lam: Sequence[int], i: int, j: int) -> int:
    """``<eps_i - eps_j, rho(lam)>`` for 1-based ``i, j``."""
    k = k_vector(lam)
    return k[j - 1] - k[i - 1]


# --------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class DiagramBox:
    row: int
    col: int
    arm: int
    coarm: int
    leg: int
    coleg: int
    leg_up: int
    leg_low: int


def diagram_stats(lam: Sequence[int]) -> list[DiagramBox]:
    """Boxes of the diagram with arm, coarm, generalized leg and coleg."""
    lam = as_composition(lam)
    n = len(lam)
    out = []
    for i in range(n):
        for j in range(1, lam[i] + 1):
            low = sum(1 for k in range(i + 1, n) if j <= lam[k] <= lam[i])
            up = sum(1 for k in range(i) if j <= lam[k] + 1 <= lam[i])
            out.append(DiagramBox(i + 1, j, lam[i] - j, j - 1, up + low, i, up, low))
    return out


def n_of(lam: Sequence[int]) -> int:
    """``n(lam) = sum_i (i-1) lam_i`` for a partition."""
    return sum(i * v for i, v in enumerate(lam))


# --------------------------------------------------------------------------
# coefficients


def _one_minus(a: int, b: int) -> QTRat:
    return 1 - mono(a, b)


def coeff_a_parts(lam: Sequence[int]) -> tuple[QTRat, QTRat]:
    """``(d_lam, d'_lam)``: products of ``1 - q^(a+1) t^(l+1)`` and ``1 - q^(a+1) t^l``."""
    boxes = diagram_stats(lam)
    d = product(_one_minus(s.arm + 1, s.leg + 1) for s in boxes)
    dp = product(_one_minus(s.arm + 1, s.leg) for s in boxes)
    return d, dp


@lru_cache(maxsize=None)
def _coeff_a(lam: tuple[int, ...]) -> QTRat:
    d, dp = coeff_a_parts(lam)
    return d / dp


def coeff_a(lam: Sequence[int]) -> QTRat:
    """Cauchy coefficient ``a_lam`` of the nonsymmetric kernel expansion."""
    return _coeff_a(as_composition(lam))


def _root_factor(A: int, B: int) -> QTRat:
    return _one_minus(A, B + 1) * _one_minus(A, B - 1) / _one_minus(A, B) ** 2


def coeff_a_root_product(mu: Sequence[int]) -> QTRat:
    """``a_mu`` from ``a_{mu+}`` times a product over positive roots with
    ``<alpha, mu> < 0``."""
    mu = as_composition(mu)
    k = k_vector(mu)
    n = len(mu)
    r = coeff_a(partition_of(mu))
    for i in range(n):
        for j in range(i + 1, n):
            if mu[i] < mu[j]:
                r = r * _root_factor(mu[j] - mu[i], k[i] - k[j])
    return r


def coeff_a_sahi(mu: Sequence[int]) -> QTRat:
    """``a_lam d'_lam d_mu / (d_lam d'_mu)`` with ``lam = mu+``."""
    mu = as_composition(mu)
    lam = partition_of(mu)
    d_l, dp_l = coeff_a_parts(lam)
    d_m, dp_m = coeff_a_parts(mu)
    return coeff_a(lam) * dp_l * d_m / (d_l * dp_m)


def coeff_a_double_product(lam: Sequence[int]) -> QTRat:
    """Partition-only double product over ``1 <= i <= j <= n``."""
    lam = _require_partition(lam)
    n = len(lam)
    ext = lam + (0,)
    r = QTRat(1)
    for i in range(n):
        for j in range(i, n):
            m = ext[j] - ext[j + 1]
            if m:
                e = lam[i] - lam[j] + 1
                r = r * qpoch((e, j - i + 1), m) / qpoch((e, j - i), m)
    return r


def coeff_a_recurrence_factor(lam: Sequence[int], m: int) -> QTRat:
    """Ratio ``a_{lam + (1^m)} / a_lam`` for a partition of length at most m."""
    lam = _require_partition(lam)
    if any(lam[m:]):
        raise ValueError(f"{lam} has more than {m} nonzero parts")
    ext = lam + (0,) * max(0, m - len(lam))
    return product(_one_minus(ext[i] + 1, m - i) / _one_minus(ext[i] + 1, m - i - 1) for i in range(m))


def coeff_b(lam: Sequence[int]) -> QTRat:
    """Coefficient ``b_lam`` of the symmetric Cauchy kernel."""
    lam = _require_partition(lam)
    return product(_one_minus(s.arm, s.leg + 1) / _one_minus(s.arm + 1, s.leg) for s in diagram_stats(lam))


def coeff_f(lam: Sequence[int]) -> list[QTRat]:
    """Coefficients (constant term first) of ``f_lam(u)`` as a polynomial in u."""
    lam = _require_partition(lam)
    poly = [mono(0, n_of(lam))]
    for s in diagram_stats(lam):
        den = _one_minus(s.arm + 1, s.leg)
        c = -mono(s.coarm, -s.coleg)
        # multiply by (1 + c u) / den
        new = [QTRat(0)] * (len(poly) + 1)
        for k, v in enumerate(poly):
            new[k] = new[k] + v / den
            new[k + 1] = new[k + 1] + v * c / den
        poly = new
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
    return poly


def eval_u(coeffs: Sequence, u):
    """Evaluate a polynomial in u given by its coefficient list."""
    r = 0
    for c in reversed(coeffs):
        r = r * u + c
    return r


# --------------------------------------------------------------------------
# norms and reproducing constants


def norm_ratio(mu: Sequence[int]) -> QTRat:
    """``(E_mu, E_mu) / (E_{mu+}, E_{mu+})`` for generic t."""
    mu = as_composition(mu)
    k = k_vector(mu)
    n = len(mu)
    r = QTRat(1)
    for i in range(n):
        for j in range(i + 1, n):
            if mu[i] < mu[j]:
                r = r / _root_factor(mu[j] - mu[i], k[i] - k[j])
    return r


def _norm_partition_qk(lam: tuple[int, ...], k: int) -> QTRat:
    n = len(lam)
    r = QTRat(1)
    for i in range(n):
        for j in range(i + 1, n):
            e = lam[i] - lam[j] + 1
            r = r * qpoch((e + k * (j - i), 0), k) / qpoch((e + k * (j - i - 1), 0), k)
    return r


def norm_closed_form(lam: Sequence[int], k: int | None = None, D: int | None = None) -> QTRat:
    """Closed form of ``(E_lam, E_lam)``.

    With ``k`` given: the value at ``t = q^k`` (a rational function of q).
    With ``D`` given instead: the generic-t infinite products cut to their
    first ``D`` factors, for display only.
    """
    lam = as_composition(lam)
    if (k is None) == (D is None):
        raise ValueError("give exactly one of k or D")
    lp = partition_of(lam)
    ratio = norm_ratio(lam)
    if k is not None:
        if k < 0:
            raise ValueError("k must be nonnegative")
        return _norm_partition_qk(lp, k) * ratio.specialize_t(k)
    n = len(lp)
    r = QTRat(1)
    for i in range(n):
        for j in range(i + 1, n):
            e = lp[i] - lp[j] + 1
            d = j - i
            r = r * qpoch((e, d), D) ** 2 / (qpoch((e, d + 1), D) * qpoch((e, d - 1), D))
    return r * ratio


def c_lambda(lam: Sequence[int], k: int) -> QTRat:
    """Reproducing constant ``C_lam`` at ``t = q^k``; depends only on ``lam+``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    lp = partition_of(as_composition(lam))
    n = len(lp)
    qq = qpoch((1, 0), k)
    return product(qpoch((lp[i] + (n - 1 - i) * k + 1, 0), k) / qq for i in range(n))


def special_values(lam: Sequence[int], which: str, m: int | None = None) -> QTRat:
    """Closed-form principal specializations for a partition ``lam``.

    ``which`` is one of

    * ``"E_at_t_delta_inverted"``: ``E_lam(t^(n-1), ..., 1 | 1/q, 1/t)``,
    * ``"E_at_t_minus_delta"``: ``E_lam(t^-(n-1), ..., 1 | q, t)``,
    * ``"P_principal"``: ``P_lam(1, t, ..., t^(m-1))`` in ``m`` variables.
    """
    lam = _require_partition(lam)
    n = len(lam)
    boxes = diagram_stats(lam)
    nl = n_of(lam)
    if which == "E_at_t_delta_inverted":
        return mono(0, nl) * product(
            _one_minus(s.coarm + 1, n - s.coleg) / _one_minus(s.arm + 1, s.leg + 1) for s in boxes)
    if which == "E_at_t_minus_delta":
        return mono(0, nl - (n - 1) * sum(lam)) * product(
            _one_minus(s.coarm + 1, n - s.coleg) / _one_minus(s.arm + 1, s.leg + 1) for s in boxes)
    if which == "P_principal":
        if m is None or m < n:
            raise ValueError("P_principal needs m >= n")
        return mono(0, nl) * product(
            _one_minus(s.coarm, m - s.coleg) / _one_minus(s.arm, s.leg + 1) for s in boxes)
    raise ValueError(f"unknown special value {which!r}")
