"""Exact Gaussian elimination over the rationals for 3x3 problems."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                k = m[i][c]
                m[i] = [a - k * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    m, pivots = rref(rows)
    n = len(rows[0])
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        basis.append(v)
    return basis


def solve(columns: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Coefficients expressing ``rhs`` in the given (independent, spanning) columns."""
    n = len(rhs)
    aug = [[columns[j][i] for j in range(len(columns))] + [rhs[i]] for i in range(n)]
    m, pivots = rref(aug)
    if len(columns) in pivots:
        raise ArithmeticError("right-hand side not in the column span")
    return [m[i][-1] for i in range(len(columns))]
