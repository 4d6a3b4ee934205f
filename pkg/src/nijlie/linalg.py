"""Exact linear algebra over the rationals.

Matrices are sequences of rows. Every routine returns fresh lists of
``Fraction`` and never mutates its input.

Two independent elimination routines are provided:

* ``rank``/``kernel_basis``/``solve`` use fraction-free (Bareiss) elimination
  on an integer-scaled copy of the matrix.
* ``rref`` is a plain Gauss-Jordan reduction over ``Fraction`` and backs
  ``rank_gauss_jordan``; tests use it as an oracle against the Bareiss path.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

Matrix = list[list[Fraction]]


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[to_fraction(a) for a in row] for row in rows]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[Fraction]], cols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k in range(inner):
            aik = row[k]
            if aik:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += aik * bk[j]
        out.append(acc)
    return out


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    out = []
    for row in a:
        s = Fraction(0)
        for aij, vj in zip(row, v):
            if aij and vj:
                s += aij * vj
        out.append(s)
    return out


def matadd(a, b, scale: Fraction | int = 1) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matpow(a, k: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def is_zero(m) -> bool:
    return all(not x for row in m for x in row)


def _integer_rows(m: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; row space is unchanged."""
    out = []
    for row in m:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form. Returns (echelon rows, pivot columns)."""
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c, ncols):
                # exact division is the Bareiss invariant
                row_i[j] = (piv * row_i[j] - aic * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m or not m[0]:
        return 0
    _, pivots = _bareiss(_integer_rows(as_matrix(m)), len(m[0]))
    return len(pivots)


def _back_substitute(ech: list[list[int]], pivots: list[int], ncols: int) -> Matrix:
    """Reduce a Bareiss echelon form to reduced row echelon form over Fraction."""
    red = [[Fraction(x) for x in row] for row in ech]
    for i in range(len(red) - 1, -1, -1):
        c = pivots[i]
        piv = red[i][c]
        red[i] = [x / piv for x in red[i]]
        for k in range(i):
            f = red[k][c]
            if f:
                red[k] = [a - f * b for a, b in zip(red[k], red[i])]
    return red


def kernel_basis(m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Columns of the returned matrix span ker(m); returned as a list of vectors."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    ech, pivots = _bareiss(_integer_rows(as_matrix(m)), ncols)
    red = _back_substitute(ech, pivots, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Return one x with a x = b, or None when the system is inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if len(b) != nrows:
        raise ValueError("right-hand side length does not match the row count")
    aug = [list(row) + [to_fraction(bi)] for row, bi in zip(as_matrix(a), b)]
    if not aug:
        return [Fraction(0)] * ncols
    ech, pivots = _bareiss(_integer_rows(aug), ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    red = _back_substitute(ech, pivots, ncols + 1)
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols]
    return x


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Gauss-Jordan over Fraction, written independently of the Bareiss path."""
    a = as_matrix(m)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank_gauss_jordan(m: Sequence[Sequence]) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def column_space_basis(vectors: Sequence[Sequence[Fraction]]) -> Matrix:
    """A maximal independent subset of ``vectors`` (in input order)."""
    if not vectors:
        return []
    cols = transpose(vectors)
    _, pivots = _bareiss(_integer_rows(cols), len(vectors))
    return [list(vectors[p]) for p in pivots]
