import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsmac import QTRat, q, qpoch, t
from nsmac.weights import (
    as_composition,
    c_lambda,
    coeff_a,
    coeff_a_double_product,
    coeff_a_parts,
    coeff_a_recurrence_factor,
    coeff_a_root_product,
    coeff_a_sahi,
    coeff_b,
    coeff_f,
    compositions,
    diagram_stats,
    dominates,
    eval_u,
    is_partition,
    k_vector,
    norm_closed_form,
    norm_ratio,
    orbit,
    partition_of,
    partitions,
    preceq_compare,
    rho_pairing,
    special_values,
    spectral_vector,
)

from helpers import compositions_st


def partition_st(max_n=4, max_part=3):
    return st.lists(st.integers(0, max_part), min_size=1, max_size=max_n).map(
        lambda v: tuple(sorted(v, reverse=True)))


# --- enumeration and orders ----------------------------------------------------

def test_compositions_and_partitions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(compositions(3, 3))) == 10
    assert list(partitions(3, 3)) == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]
    assert orbit((1, 0, 0)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_as_composition_rejects_negative():
    with pytest.raises(ValueError):
        as_composition((1, -1))


@pytest.mark.parametrize(
    "mu, lam, expected",
    [
        ((0, 1), (1, 0), "less"),
        ((1, 1), (2, 0), "less"),
        ((2, 0, 1), (2, 0, 1), "equal"),
        ((1, 0), (0, 1), "greater"),
        ((1, 0), (0, 2), "incomparable"),
    ],
)
def test_preceq(mu, lam, expected):
    assert preceq_compare(mu, lam) == expected


def test_dominance():
    assert dominates((2, 0), (1, 1))
    assert not dominates((1, 1), (2, 0))


@given(compositions_st(3), compositions_st(3))
def test_preceq_antisymmetric(a, b):
    r1, r2 = preceq_compare(a, b), preceq_compare(b, a)
    flip = {"less": "greater", "greater": "less", "equal": "equal", "incomparable": "incomparable"}
    assert flip[r1] == r2


# --- spectral data -------------------------------------------------------------

@pytest.mark.parametrize(
    "lam, expected",
    [((0, 1), ((0, 0), (1, 0))), ((1, 0), ((1, 1), (0, -1))), ((0, 2), ((0, 0), (2, 0)))],
)
def test_spectral_vector(lam, expected):
    assert spectral_vector(lam) == expected


def test_k_vector():
    assert k_vector((0, 1)) == (1, 0)
    assert k_vector((1, 0)) == (0, 1)
    assert rho_pairing((1, 0), 1, 2) == 1


@pytest.mark.parametrize("n, d", [(2, 4), (3, 3), (4, 2)])
def test_spectral_separation(n, d):
    seen = {}
    for lam in compositions(d, n):
        s = spectral_vector(lam)
        assert s not in seen, (lam, seen.get(s))
        seen[s] = lam


# --- diagrams -------------------------------------------------------------------

def _box(lam, r, c):
    return next(b for b in diagram_stats(lam) if (b.row, b.col) == (r, c))


def test_diagram_examples():
    b = _box((0, 1), 2, 1)
    assert (b.arm, b.leg) == (0, 1)
    b = _box((2, 1), 1, 1)
    assert (b.arm, b.leg) == (1, 1)
    b = _box((0, 2), 2, 2)
    assert (b.arm, b.leg) == (0, 0)


@given(partition_st())
def test_partition_leg_is_ordinary_leg(lam):
    conj = [sum(1 for v in lam if v >= j) for j in range(1, (lam[0] if lam else 0) + 1)]
    for b in diagram_stats(lam):
        assert b.leg == conj[b.col - 1] - b.row
        assert b.arm == lam[b.row - 1] - b.col


# --- coefficients a, b, f ---------------------------------------------------------

# frozen from the decomposition of the expanded kernel (independent route)
FROZEN_A = {
    (0, 0): QTRat(1),
    (1, 0): (1 - q * t) / (1 - q),
    (0, 1): (1 - q * t**2) / (1 - q * t),
    (2, 0): (1 - q * t) * (1 - q**2 * t) / ((1 - q) * (1 - q**2)),
    (1, 1): (1 - q * t**2) / (1 - q),
    (0, 2): (1 - q * t) * (1 - q**2 * t**2) / ((1 - q) * (1 - q**2 * t)),
    (1, 0, 0): (1 - q * t) / (1 - q),
    (0, 1, 0): (1 - q * t**2) / (1 - q * t),
    (0, 0, 1): (1 - q * t**3) / (1 - q * t**2),
}


@pytest.mark.parametrize("lam", sorted(FROZEN_A))
def test_coeff_a_frozen(lam):
    assert coeff_a(lam) == FROZEN_A[lam]


def test_coeff_b():
    assert coeff_b((1,)) == (1 - t) / (1 - q)
    assert coeff_b((2,)) == (1 - t) * (1 - q * t) / ((1 - q) * (1 - q**2))
    assert coeff_b(()) == 1
    with pytest.raises(ValueError):
        coeff_b((0, 1))


def test_coeff_f():
    assert coeff_f((1,)) == [1 / (1 - q), -1 / (1 - q)]
    two = coeff_f((1, 1))
    # (1-u)(t-u)/((1-qt)(1-q))
    den = (1 - q * t) * (1 - q)
    assert two == [t / den, -(1 + t) / den, 1 / den]
    assert coeff_f(()) == [1]
    assert eval_u(coeff_f((1,)), q) == 1


@given(partition_st(max_n=3, max_part=2))
def test_coeff_f_vanishes_at_one(lam):
    # the box (1,1) contributes the factor 1 - u
    vals = coeff_f(lam)
    if sum(lam):
        assert eval_u(vals, QTRat(1)) == 0


# --- combinatorial identities -------------------------------------------------------

@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.integers(0, 3) for _ in range(n)])))
def test_lemma_ratio_and_root_product(mu):
    if sum(mu) > 5:
        return
    lp = partition_of(mu)
    assert coeff_a(mu) == coeff_a_root_product(mu)
    d, dp = coeff_a_parts(mu)
    dl, dlp = coeff_a_parts(lp)
    assert coeff_a(mu) == coeff_a(lp) * dlp * d / (dl * dp)
    assert coeff_a(mu) == coeff_a_sahi(mu)


@given(partition_st(max_n=4, max_part=3))
def test_double_product(lam):
    if sum(lam) <= 5:
        assert coeff_a(lam) == coeff_a_double_product(lam)


@given(partition_st(max_n=4, max_part=2), st.integers(1, 4))
def test_recurrence(lam, m):
    n = len(lam)
    if sum(lam) + m > 6 or m > n or any(lam[m:]):
        return
    bumped = tuple(v + 1 if i < m else v for i, v in enumerate(lam))
    assert coeff_a(bumped) == coeff_a(lam) * coeff_a_recurrence_factor(lam, m)


# --- norms and constants -------------------------------------------------------------

def test_norm_examples():
    assert norm_closed_form((1, 0), k=1) == (1 - q**3) / (1 - q**2)
    assert norm_closed_form((0, 1), k=1) == 1 + q
    assert norm_closed_form((0, 0), k=1) == 1 + q
    with pytest.raises(ValueError):
        norm_closed_form((0, 0))


def test_norm_truncated_mode():
    assert norm_closed_form((2,), D=3) == 1
    assert norm_closed_form((1, 0), D=0) == 1
    # first factor of each Pochhammer, base q^2 t^(0,1,2)
    assert norm_closed_form((1, 0), D=1) == (1 - q**2 * t) ** 2 / ((1 - q**2 * t**2) * (1 - q**2))
    assert norm_closed_form((0, 1), D=2) == norm_closed_form((1, 0), D=2) * norm_ratio((0, 1))


@given(partition_st(max_n=3, max_part=2), st.integers(1, 2))
def test_coefficient_norm_product(lam, k):
    n = len(lam)
    lhs = coeff_a(lam).specialize_t(k) * norm_closed_form(lam, k=k)
    rhs = QTRat(1)
    for i, v in enumerate(lam):
        rhs = rhs * qpoch((v + (n - 1 - i) * k + 1, 0), k) / qpoch((1, 0), k)
    assert lhs == rhs
    for mu in orbit(lam):
        assert coeff_a(mu).specialize_t(k) * norm_closed_form(mu, k=k) == lhs


def test_c_lambda():
    assert c_lambda((0, 0), 1) == 1 + q
    assert c_lambda((1, 0), 1) == 1 + q + q**2
    assert c_lambda((1,), 1) == 1 + q
    assert c_lambda((0, 1), 1) == c_lambda((1, 0), 1)


def test_special_values():
    assert special_values((1, 0), "E_at_t_delta_inverted") == (1 - q * t**2) / (1 - q * t)
    assert special_values((1, 0), "P_principal", m=2) == 1 + t
    assert special_values((1, 0), "E_at_t_minus_delta") == (1 - q * t**2) / (t * (1 - q * t))
    with pytest.raises(ValueError):
        special_values((1, 0), "P_principal", m=1)
    with pytest.raises(ValueError):
        special_values((1, 0), "bogus")


def test_is_partition():
    assert is_partition((2, 1, 1, 0))
    assert not is_partition((0, 1))
