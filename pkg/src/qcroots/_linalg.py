"""Small exact linear algebra over the rationals.

Matrices are lists of rows; entries are converted to ``Fraction`` on entry.
Everything here is sized for root-system work (dimension <= a few dozen), so
plain Gauss-Jordan elimination is the right tool.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[to_fraction(x) for x in row] for row in rows]


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def vecmat(v: Sequence, m: Sequence[Sequence]) -> list[Fraction]:
    """Row vector times matrix."""
    return [dot(v, col) for col in transpose(m)]


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = as_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(as_matrix(m))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def solve_left(basis: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients x with sum_i x_i * basis[i] == target, or None if target is
    outside the row span. ``basis`` rows must be linearly independent."""
    k = len(basis)
    aug = transpose(list(basis) + [list(target)])
    red, pivots = rref(aug)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for row, c in zip(red, pivots):
        x[c] = row[k]
    return x


def is_integral(v: Sequence[Fraction]) -> bool:
    return all(to_fraction(x).denominator == 1 for x in v)


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to the primitive integral vector with
    the same direction (positive multiple)."""
    v = [to_fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no primitive direction")
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)
