"""Exact integer and rational linear algebra primitives.

Everything in this package runs over Python ints and ``fractions.Fraction``;
no floating point enters any computation.  ``Fraction`` already stores values
in lowest terms with a positive denominator, which is exactly the rational
scalar the rest of the package relies on.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Optional, Sequence

Rational = Fraction

IntVector = Sequence[int]
IntMatrix = Sequence[Sequence[int]]


def det(matrix: IntMatrix) -> int:
    """Exact determinant of a square integer matrix.

    Bareiss fraction-free elimination: every intermediate quotient is an exact
    integer division, so there is no coefficient blow-up beyond minors.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("det requires a square matrix")
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def lattice_index(vectors: Sequence[IntVector]) -> int:
    """Index of the sublattice spanned by ``vectors`` inside its saturation.

    Equals the product of the elementary divisors of the stacked matrix, i.e.
    the gcd of all maximal minors.  The empty family has index 1.  Raises
    ``ValueError`` when the vectors are linearly dependent (all maximal minors
    vanish).
    """
    vecs = [[int(x) for x in v] for v in vectors]
    k = len(vecs)
    if k == 0:
        return 1
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ValueError("vectors must share one dimension")
    if k > n:
        raise ValueError("vectors are linearly dependent")
    g = 0
    for cols in combinations(range(n), k):
        g = gcd(g, det([[v[c] for c in cols] for v in vecs]))
        if g == 1:
            return 1
    if g == 0:
        raise ValueError("vectors are linearly dependent")
    return g


def primitive(vector: IntVector) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    g = 0
    for x in vector:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(int(x) // g for x in vector)


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank over the rationals, by exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[tuple[Fraction, ...]]:
    """One exact solution of ``matrix @ x = rhs``, or None when inconsistent.

    Free variables are set to zero, so the solution is unique exactly when the
    columns are independent.
    """
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for ri, c in pivots:
        x[c] = rows[ri][-1]
    return tuple(x)


def kernel_vector(matrix: Sequence[Sequence]) -> Optional[tuple[Fraction, ...]]:
    """A nonzero rational kernel vector of ``matrix``, or None if injective."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
        if r == len(rows):
            break
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    x = [Fraction(0)] * ncols
    x[free] = Fraction(1)
    for c, ri in pivots.items():
        x[c] = -rows[ri][free]
    return tuple(x)


def affine_combination(points: Sequence[Sequence], target: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Coefficients c with sum(c) = 1 and sum(c_i * p_i) = target.

    None when the target lies outside the affine hull of the points.  The
    coefficients are the barycentric coordinates when the points are affinely
    independent.
    """
    dim = len(target)
    matrix = [[Fraction(p[j]) for p in points] for j in range(dim)]
    matrix.append([Fraction(1)] * len(points))
    rhs = [Fraction(t) for t in target] + [Fraction(1)]
    return solve_linear(matrix, rhs)


def affine_dependence(points: Sequence[Sequence]) -> Optional[tuple[int, ...]]:
    """Primitive integer coefficients c != 0 with sum(c) = 0 and
    sum(c_i * p_i) = 0, or None when the points are affinely independent.

    Unique up to sign when exactly one dependence exists; the sign is fixed so
    that the first nonzero coefficient is positive.
    """
    dim = len(points[0])
    matrix = [[Fraction(p[j]) for p in points] for j in range(dim)]
    matrix.append([Fraction(1)] * len(points))
    v = kernel_vector(matrix)
    if v is None:
        return None
    scale = lcm(*(x.denominator for x in v))
    ints = [int(x * scale) for x in v]
    ints = list(primitive(ints))
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)
