import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsmac import LPoly, QTRat, apply_H, apply_H_inv, apply_M, apply_omega, q, t
from nsmac.hecke import apply_H_via_division, apply_S, apply_word
from nsmac.weights import compositions, preceq_compare, spectral_vector

from helpers import laurent


def x(i, n=2, p=1):
    return LPoly.var(n, i, p)


# --- examples -----------------------------------------------------------------

def test_H_examples():
    assert apply_H(1, x(2)) == x(1).scale(t) + x(2).scale(t - 1)
    assert apply_H(1, x(1)) == x(2)
    assert apply_H(1, x(1) * x(2)) == (x(1) * x(2)).scale(t)


def test_H_inv_examples():
    assert apply_H_inv(1, x(2)) == x(1)
    assert apply_H_inv(1, x(1) * x(2)) == (x(1) * x(2)).scale(1 / t)
    f = x(1, p=2)
    assert apply_H_inv(1, apply_H(1, f)) == f


def test_omega_examples():
    assert apply_omega(1, x(1)) == x(2).scale(q)
    assert apply_omega(1, x(2)) == x(1)
    f = x(1) * x(2, p=2)
    assert apply_omega(-1, apply_omega(1, f)) == f


def test_M_examples():
    assert apply_M(1, x(2)) == x(2)
    assert apply_M(2, x(2)) == x(2).scale(q)
    assert apply_M(1, x(1)) == x(1).scale(q * t) + x(2).scale(q * (t - 1))


def test_index_errors():
    with pytest.raises(ValueError):
        apply_H(2, x(1))
    with pytest.raises(ValueError):
        apply_M(3, x(1))
    with pytest.raises(ValueError):
        apply_omega(2, x(1))


def test_word_order_is_right_to_left():
    f = x(1)
    assert apply_word([("H", 1), ("Omega", 1)], f) == apply_H(1, apply_omega(1, f))
    assert apply_word([("M", 1)], f) == apply_M(1, f)


def test_omega_factorization_on_monomials():
    # omega = tau_n s_{n-1} ... s_1 on monomials
    n = 3
    for lam in compositions(3, n):
        f = LPoly.monomial(lam)
        g = f
        for i in range(1, n):
            g = apply_S(i, g)
        g = g.qshift(n, 1)
        assert apply_omega(1, f) == g


def test_offset_acts_on_second_block():
    f = LPoly.monomial((1, 0, 0, 1))
    g = apply_H(1, f, offset=2, n=2)
    assert g == LPoly.monomial((1, 0, 1, 0)).scale(t) + LPoly.monomial((1, 0, 0, 1)).scale(t - 1)


# --- relations ----------------------------------------------------------------

@given(laurent(3), st.integers(1, 2))
def test_quadratic(f, i):
    Hf = apply_H(i, f)
    assert apply_H(i, Hf) == Hf.scale(t - 1) + f.scale(t)


@given(laurent(3), st.integers(1, 2))
def test_inverse(f, i):
    assert apply_H_inv(i, apply_H(i, f)) == f
    assert apply_H(i, apply_H_inv(i, f)) == f


@given(laurent(3))
def test_braid(f):
    a = apply_H(1, apply_H(2, apply_H(1, f)))
    b = apply_H(2, apply_H(1, apply_H(2, f)))
    assert a == b


@given(laurent(4, lo=-1, hi=1, max_terms=3))
def test_far_commute(f):
    assert apply_H(1, apply_H(3, f)) == apply_H(3, apply_H(1, f))


@given(laurent(3), st.integers(1, 2))
def test_closed_form_matches_division(f, i):
    assert apply_H(i, f) == apply_H_via_division(i, f)


@given(laurent(3), st.integers(1, 3), st.integers(1, 3))
def test_M_commute(f, i, j):
    assert apply_M(i, apply_M(j, f)) == apply_M(j, apply_M(i, f))


@given(laurent(3))
def test_omega_inverse(f):
    assert apply_omega(1, apply_omega(-1, f)) == f


@given(laurent(3, lo=0, hi=2), st.integers(1, 3))
def test_degree_preservation(f, i):
    for d in range(7):
        part = f.homogeneous_component(d)
        assert apply_M(i, part).homogeneous_component(d) == apply_M(i, part)
        assert apply_H(min(i, 2), part).homogeneous_component(d) == apply_H(min(i, 2), part)


@pytest.mark.parametrize("n, d", [(2, 3), (3, 2)])
def test_triangularity(n, d):
    for lam in compositions(d, n):
        sv = spectral_vector(lam)
        for i in range(1, n + 1):
            img = apply_M(i, LPoly.monomial(lam))
            a, b = sv[i - 1]
            rest = img - LPoly.monomial(lam).scale(q**a * t**b)
            for mu in rest.terms:
                assert preceq_compare(mu, lam) == "less", (lam, i, mu)
