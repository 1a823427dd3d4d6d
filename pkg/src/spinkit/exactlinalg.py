"""Small exact linear algebra kit over the rationals.

Matrices are tuples of tuples of ``Fraction`` (rows); vectors are tuples.
Everything here is textbook Gaussian elimination kept exact, which is fast
enough for the 8x8 .. 256x256 problems in this package.  ``rank_mod_p``
offers a vectorised integer path for the one large rank certificate.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

import numpy as np

Scalar = Union[int, Fraction]
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def vec(entries: Iterable[Scalar]) -> Vector:
    return tuple(Fraction(x) for x in entries)


def mat(rows: Iterable[Iterable[Scalar]]) -> Matrix:
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(c)) for _ in range(r))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence[Scalar]) -> Vector:
    return tuple(sum(x * Fraction(y) for x, y in zip(row, v)) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, s: Scalar) -> Matrix:
    f = Fraction(s)
    return tuple(tuple(x * f for x in row) for row in a)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    return sum((Fraction(x) * Fraction(y) for x, y in zip(u, v)), Fraction(0))


def is_orthogonal(a: Matrix) -> bool:
    n = len(a)
    return len(a[0]) == n and mat_mul(transpose(a), a) == identity(n)


def is_skew(a: Matrix) -> bool:
    return transpose(a) == tuple(tuple(-x for x in row) for row in a)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    _, pivots = _rref([list(row) for row in a])
    return len(pivots)


def det(a: Matrix) -> Fraction:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    rows = [list(row) for row in a]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result *= rows[c][c]
        inv = rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of the right null space {x : a x = 0}."""
    if not a:
        return []
    ncols = len(a[0])
    rows, pivots = _rref([list(row) for row in a])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def row_space_contains(a: Matrix, v: Sequence[Scalar]) -> bool:
    if not a:
        return not any(Fraction(x) for x in v)
    stacked = a + (vec(v),)
    return rank(stacked) == rank(a)


def intersection_dimension(a: Matrix, b: Matrix) -> int:
    """dim(rowspace(a) /\\ rowspace(b)) via rank(a) + rank(b) - rank(stack)."""
    ra, rb = rank(a), rank(b)
    stacked = a + b
    return ra + rb - rank(stacked)


def intersection_basis(a: Matrix, b: Matrix) -> list[Vector]:
    """Basis of rowspace(a) /\\ rowspace(b).

    Solves x^T a = y^T b by finding the kernel of [a^T | -b^T].
    """
    if not a or not b:
        return []
    at = transpose(a)
    bt = transpose(b)
    stacked = tuple(ra + tuple(-x for x in rb) for ra, rb in zip(at, bt))
    out = []
    for sol in kernel_basis(stacked):
        coeffs = sol[: len(a)]
        v = tuple(
            sum((c * a[i][j] for i, c in enumerate(coeffs)), Fraction(0))
            for j in range(len(a[0]))
        )
        if any(v):
            out.append(v)
    # independent by construction of the kernel basis, but de-duplicate defensively
    basis: list[Vector] = []
    for v in out:
        if not row_space_contains(tuple(basis), v):
            basis.append(v)
    return basis


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix over the field Z/p (p prime).

    Exact: all arithmetic stays in int64 (requires p*p < 2**62 / ncols,
    amply true for the small primes used here).  A full-rank result is a
    certificate of full rank over Q, since reduction mod p can only drop
    the rank.
    """
    a = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
    if a.size == 0:
        return 0
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        pivot_rows = np.nonzero(a[r:, c])[0]
        if pivot_rows.size == 0:
            continue
        pivot = r + int(pivot_rows[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        r += 1
        if r == nrows:
            break
    return r


def rational_square_root(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if not a square."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
