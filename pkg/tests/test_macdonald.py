from fractions import Fraction

import pytest
import sympy

from nsmac import LPoly, QTRat, SYMBOLIC, EvalField, apply_M, compute_E, compute_E_inverted, compute_P, q, t
from nsmac.macdonald import eigenvalue, lower_basis, orbit_step
from nsmac.weights import compositions, partitions, preceq_compare, special_values

import oracle
from helpers import to_sympy


def x(i, n=2, p=1):
    return LPoly.var(n, i, p)


# --- lower basis ------------------------------------------------------------------

def test_lower_basis():
    assert lower_basis((1, 0)) == [(1, 0), (0, 1)]
    assert lower_basis((2, 0)) == [(2, 0), (0, 2), (1, 1)]
    assert lower_basis((1, 1)) == [(1, 1)]


# --- E examples --------------------------------------------------------------------

def test_E_examples():
    assert compute_E((0, 1)).poly == x(2)
    assert compute_E((1, 0)).poly == x(1) + x(2).scale(q * (1 - t) / (1 - q * t))
    assert compute_E((1, 1)).poly == x(1) * x(2)
    assert compute_E((0, 0)).poly == LPoly.const(2)


def test_E_inverted_examples():
    assert compute_E_inverted((1, 0)).poly == x(1) + x(2).scale((1 - t) / (1 - q * t))
    assert compute_E_inverted((0, 1)).poly == x(2)
    assert compute_E_inverted((0, 0)).poly == LPoly.const(2)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        compute_E(())
    with pytest.raises(ValueError):
        compute_E((1, -1))
    with pytest.raises(ValueError):
        compute_P((0, 1))


# --- independent oracle ---------------------------------------------------------------

ORACLE_CASES = [lam for d in range(4) for lam in compositions(d, 2)] + [
    lam for d in range(3) for lam in compositions(d, 3)
]


@pytest.mark.parametrize("lam", ORACLE_CASES)
def test_E_matches_sympy_oracle(lam):
    ours = compute_E(lam).poly
    ref = oracle.E(lam)
    assert set(ours.terms) == set(ref)
    for e, c in ref.items():
        assert sympy.simplify(to_sympy(ours.terms[e]) - c) == 0, e


# --- structural properties -----------------------------------------------------------

@pytest.mark.parametrize("n, d", [(2, 4), (3, 3)])
def test_eigen_and_triangular(n, d):
    for lam in compositions(d, n):
        E = compute_E(lam).poly
        assert E.coeff(lam) == 1
        for mu in E.terms:
            assert mu == lam or preceq_compare(mu, lam) == "less"
        for i in range(1, n + 1):
            assert apply_M(i, E) == E.scale(eigenvalue(lam, i))


@pytest.mark.parametrize("n, d", [(2, 4), (3, 4)])
def test_orbit_steps_agree(n, d):
    for lam in compositions(d, n):
        rec = compute_E(lam)
        for i in range(1, n):
            if lam[i - 1] != lam[i]:
                mu = lam[:i - 1] + (lam[i], lam[i - 1]) + lam[i + 1:]
                assert orbit_step(rec, i).poly == compute_E(mu).poly


def test_orbit_step_examples():
    up = orbit_step(compute_E((0, 1)), 1)
    assert up.lam == (1, 0) and up.poly == compute_E((1, 0)).poly
    down = orbit_step(compute_E((1, 0)), 1)
    assert down.poly == x(2)
    with pytest.raises(ValueError):
        orbit_step(compute_E((1, 1)), 1)
    with pytest.raises(ValueError):
        orbit_step(compute_E((1, 0)), 2)


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (1, 1, 0), (2, 1, 0), (0, 1, 2)])
def test_inversion_consistency(lam):
    mapped = compute_E_inverted(lam).poly
    rebuilt = compute_E(lam, SYMBOLIC.inverted()).poly
    assert mapped == rebuilt
    n = len(lam)
    inv = SYMBOLIC.inverted()
    for i in range(1, n + 1):
        assert apply_M(i, rebuilt, inv) == rebuilt.scale(eigenvalue(lam, i, inv))


@pytest.mark.parametrize("lam", [(2, 1, 0), (0, 1, 2), (1, 0, 1)])
def test_fastcheck_agrees_with_symbolic(lam):
    F = EvalField(Fraction(3, 7), Fraction(5, 2))
    sym = compute_E(lam).poly
    num = compute_E(lam, F).poly
    assert num == sym.map_coeffs(F.coerce)
    numi = compute_E_inverted(lam, F).poly
    assert numi == compute_E_inverted(lam).poly.map_coeffs(F.coerce)


# --- P ---------------------------------------------------------------------------------

def test_P_examples():
    assert compute_P((1, 0)).poly == x(1) + x(2)
    assert compute_P((1, 1)).poly == x(1) * x(2)
    c = (1 + q) * (1 - t) / (1 - q * t)
    assert compute_P((2, 0)).poly == x(1, p=2) + x(2, p=2) + (x(1) * x(2)).scale(c)


def test_P21_three_variables():
    # m_21 + (1-t)(2+q+t+2qt)/(1-qt^2) m_111, the classical value
    P = compute_P((2, 1, 0)).poly
    assert P.coeff((1, 1, 1)) == (1 - t) * (2 + q + t + 2 * q * t) / (1 - q * t**2)
    assert P.coeff((2, 1, 0)) == 1 and P.coeff((0, 1, 2)) == 1


def test_P_E_coefficient_on_orbit():
    rec = compute_P((1, 0))
    assert rec.e_coefficients[(0, 1)] == (1 - q) / (1 - q * t)


@pytest.mark.parametrize("lam", [lam for d in range(1, 4) for lam in partitions(d, 3)])
def test_P_symmetric_and_eigen(lam):
    P = compute_P(lam).poly
    assert P.swap(1, 2) == P and P.swap(2, 3) == P
    n = len(lam)
    op = LPoly.zero(n)
    for i in range(1, n + 1):
        op = op + apply_M(i, P).scale(t ** (i - 1))
    ev = sum((q ** lam[i] * t ** (n - 1 - i) for i in range(n)), QTRat(0))
    assert op == P.scale(ev)


# --- principal specializations ------------------------------------------------------------

@pytest.mark.parametrize("lam", [lam for n in (1, 2, 3) for d in range(4) for lam in partitions(d, n)])
def test_principal_specializations(lam):
    n = len(lam)
    delta = [t ** (n - 1 - i) for i in range(n)]
    Einv = compute_E_inverted(lam).poly
    assert Einv.evaluate(delta) == special_values(lam, "E_at_t_delta_inverted")
    minus = [t ** -(n - 1 - i) for i in range(n)]
    assert compute_E(lam).poly.evaluate(minus) == special_values(lam, "E_at_t_minus_delta")
    for m in (n, n + 1):
        P = compute_P(lam + (0,) * (m - n)).poly
        assert P.evaluate([t**i for i in range(m)]) == special_values(lam, "P_principal", m=m)


def test_special_value_example():
    E = compute_E_inverted((1, 0)).poly
    assert E.evaluate([t, QTRat(1)]) == (1 - q * t**2) / (1 - q * t)
