"""Exact determinants by fraction-free elimination, and Hankel determinants."""
from __future__ import annotations

from typing import Sequence

from .errors import ExactArithmeticError, InsufficientCoefficients
from .exact import exact_div


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ExactArithmeticError(f"{a} / {b} is not exact")
        return q
    return exact_div(a, b)


def det(matrix: Sequence[Sequence]):
    """Determinant over an integral domain with exact division.

    Bareiss elimination with row swaps; a column with no nonzero pivot
    makes the determinant 0.  Works for int, Fraction, GaussianRational and
    QPolynomial entries.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0 * m[0][0]
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _div(pivot * row_i[j] - mik * row_k[j], prev)
            row_i[k] = 0 * pivot
        prev = pivot
    out = m[n - 1][n - 1]
    return out if sign > 0 else -out


def cofactor_det(matrix: Sequence[Sequence]):
    """Laplace expansion along the first row; slow, used to check :func:`det`."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        if matrix[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def hankel_matrix(c: Sequence, n: int) -> list[list]:
    if n > 0 and len(c) < 2 * n - 1:
        raise InsufficientCoefficients(f"H_{n} needs {2 * n - 1} terms, got {len(c)}")
    return [[c[i + j] for j in range(n)] for i in range(n)]


def hankel_det(c: Sequence, n: int):
    return det(hankel_matrix(c, n))


def hankel_sequence(c: Sequence, n_max: int) -> list:
    """(H_0, ..., H_{n_max}) of the sequence c."""
    c = list(c)
    if n_max > 0 and len(c) < 2 * n_max - 1:
        raise InsufficientCoefficients(f"H_{n_max} needs {2 * n_max - 1} terms, got {len(c)}")
    return [hankel_det(c, n) for n in range(n_max + 1)]
