from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nsmac import QTRat, q, t
from nsmac.linalg import InconsistentSystem, LinAlgError, solve

from helpers import qtrat


def test_overdetermined_symbolic():
    # x + y = 1 + q, x - y = 1 - q, q x = q  (redundant third row)
    A = [[QTRat(1), QTRat(1)], [QTRat(1), QTRat(-1)], [q, QTRat(0)]]
    b = [1 + q, 1 - q, q]
    assert solve(A, b) == [1, q]


def test_inconsistent():
    A = [[QTRat(1)], [QTRat(1)]]
    with pytest.raises(InconsistentSystem):
        solve(A, [QTRat(1), QTRat(2)])


def test_rank_deficient():
    A = [[QTRat(1), t], [QTRat(2), 2 * t]]
    with pytest.raises(LinAlgError):
        solve(A, [QTRat(1), QTRat(2)])


def test_fraction_entries():
    A = [[Fraction(1, 2), Fraction(0)], [Fraction(0), Fraction(3)]]
    assert solve(A, [Fraction(1), Fraction(6)]) == [2, 2]


@given(st.lists(qtrat, min_size=3, max_size=3))
def test_recovers_known_solution(x):
    A = [[QTRat(1), q, t], [t, QTRat(1), q], [q, t, QTRat(1)], [1 + q, QTRat(0), 1 - t]]
    b = [sum((a * v for a, v in zip(row, x)), QTRat(0)) for row in A]
    assert solve(A, b) == x
