"""Exact dense linear algebra over the rationals.

The solver clears denominators to get an integer system and runs Bareiss
fraction-free elimination, so every intermediate entry is an integer and the
only divisions are exact.  Fractions appear only in back substitution.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class SingularMatrix(ArithmeticError):
    pass


def _integerize(rows):
    scale = 1
    for row in rows:
        for x in row:
            scale = lcm(scale, Fraction(x).denominator)
    return scale, [[int(Fraction(x) * scale) for x in row] for row in rows]


def bareiss_solve(a, b):
    """Solve ``a @ x = b`` exactly; ``b`` is a list of right-hand-side columns' rows.

    ``a`` is an ``n x n`` and ``b`` an ``n x m`` nested list of rationals.
    Returns the ``n x m`` solution as Fractions.
    """
    n = len(a)
    if n == 0:
        return []
    m = len(b[0])
    # one common scale keeps a and b consistent
    scale, aug = _integerize([list(ra) + list(rb) for ra, rb in zip(a, b)])
    del scale
    width = n + m
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            for r in range(k + 1, n):
                if aug[r][k] != 0:
                    aug[k], aug[r] = aug[r], aug[k]
                    break
            else:
                raise SingularMatrix(f"matrix is singular (column {k})")
        pivot = aug[k][k]
        row_k = aug[k]
        for i in range(k + 1, n):
            row_i = aug[i]
            lead = row_i[k]
            for j in range(k + 1, width):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    x = [[Fraction(0)] * m for _ in range(n)]
    for c in range(m):
        for i in range(n - 1, -1, -1):
            acc = Fraction(aug[i][n + c])
            row = aug[i]
            for j in range(i + 1, n):
                if row[j]:
                    acc -= row[j] * x[j][c]
            x[i][c] = acc / row[i]
    return x


def inverse(a):
    """Exact inverse of a square rational matrix."""
    n = len(a)
    eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return bareiss_solve(a, eye)
