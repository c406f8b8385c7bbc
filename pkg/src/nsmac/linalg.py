"""Exact solution of small overdetermined linear systems.

Systems here have a few dozen unknowns at most but may carry many redundant
rows. Rows are chosen by elimination on an image of the matrix at a random
rational point (cheap ``Fraction`` arithmetic), the chosen square system is
solved exactly, and then every row is checked exactly, so redundancy doubles
as a consistency check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .qt_field import QTRat

__all__ = ["LinAlgError", "InconsistentSystem", "solve", "select_rows"]


class LinAlgError(ArithmeticError):
    """The system does not determine its unknowns."""


class InconsistentSystem(ArithmeticError):
    """A row is violated by the solution of the selected square system."""


def _image(x, point):
    if isinstance(x, QTRat):
        return x.evaluate(*point)
    return Fraction(x)


def _rank_rows(M: list[list[Fraction]], ncols: int) -> list[int]:
    """Indices of rows forming a maximal independent set (greedy, in order)."""
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot column, reduced row)
    chosen = []
    for r, row in enumerate(M):
        v = list(row)
        for pc, b in basis:
            if v[pc]:
                f = v[pc] / b[pc]
                v = [x - f * y for x, y in zip(v, b)]
        pc = next((c for c in range(ncols) if v[c]), None)
        if pc is not None:
            basis.append((pc, v))
            chosen.append(r)
            if len(chosen) == ncols:
                break
    return chosen


def select_rows(A: Sequence[Sequence], ncols: int, seed: int = 0, tries: int = 4) -> list[int]:
    """Row indices of a square subsystem that is nonsingular."""
    rng = random.Random(seed)
    best: list[int] = []
    for _ in range(tries):
        point = (Fraction(rng.randint(10**6, 10**7), rng.randint(10**6, 10**7)),
                 Fraction(rng.randint(10**6, 10**7), rng.randint(10**6, 10**7)))
        try:
            img = [[_image(x, point) for x in row] for row in A]
        except ZeroDivisionError:
            continue
        rows = _rank_rows(img, ncols)
        if len(rows) == ncols:
            return rows
        best = max(best, rows, key=len)
    raise LinAlgError(f"system has rank {len(best)} < {ncols} unknowns")


def _gauss(A: list[list], b: list) -> list:
    """Exact Gaussian elimination on a square nonsingular system."""
    n = len(A)
    M = [list(row) + [v] for row, v in zip(A, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            raise LinAlgError("singular square system")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        inv = 1 / piv
        M[c] = [x * inv if x else x for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y if y else x for x, y in zip(M[r], M[c])]
    return [M[r][n] for r in range(n)]


def solve(A: Sequence[Sequence], b: Sequence, check: bool = True) -> list:
    """Solve ``A x = b`` exactly; ``A`` may have more rows than columns."""
    if not A:
        raise LinAlgError("empty system")
    ncols = len(A[0])
    if ncols == 0:
        return []
    rows = select_rows(A, ncols)
    x = _gauss([list(A[r]) for r in rows], [b[r] for r in rows])
    if check:
        for r, row in enumerate(A):
            lhs = 0
            for a, v in zip(row, x):
                if a and v:
                    lhs = lhs + a * v
            if lhs != b[r]:
                raise InconsistentSystem(f"row {r} is violated by the solution")
    return x
