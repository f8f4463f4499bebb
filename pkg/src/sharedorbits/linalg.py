"""Exact rational linear algebra on top of python-flint.

Everything in the package that needs a rank, a kernel or a linear solve goes
through these helpers, so that no floating point ever enters a computation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import flint

fmpq = flint.fmpq
fmpq_mat = flint.fmpq_mat

ZERO = fmpq(0)
ONE = fmpq(1)


def q(x) -> flint.fmpq:
    """Convert an int, Fraction or fmpq to fmpq."""
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    return fmpq(x)


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


def exact(x):
    """Return an int when the rational is integral, else a Fraction (for reports)."""
    f = to_fraction(x)
    return f.numerator if f.denominator == 1 else f


def matrix(rows: Sequence[Sequence], ncols: int | None = None) -> flint.fmpq_mat:
    rows = list(rows)
    if not rows:
        return fmpq_mat(0, ncols or 0)
    n = len(rows[0])
    flat = [q(x) for r in rows for x in r]
    return fmpq_mat(len(rows), n, flat)


def zeros(m: int, n: int) -> flint.fmpq_mat:
    return fmpq_mat(m, n)


def identity(n: int) -> flint.fmpq_mat:
    m = fmpq_mat(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def rows_of(m: flint.fmpq_mat) -> list[list]:
    return [[m[i, j] for j in range(m.ncols())] for i in range(m.nrows())]


def vstack(mats: Iterable[flint.fmpq_mat]) -> flint.fmpq_mat:
    mats = list(mats)
    ncols = mats[0].ncols()
    out = fmpq_mat(sum(m.nrows() for m in mats), ncols)
    r = 0
    for m in mats:
        for i in range(m.nrows()):
            for j in range(ncols):
                x = m[i, j]
                if x:
                    out[r + i, j] = x
        r += m.nrows()
    return out


def hstack(mats: Iterable[flint.fmpq_mat]) -> flint.fmpq_mat:
    return vstack([m.transpose() for m in mats]).transpose()


def is_zero(m: flint.fmpq_mat) -> bool:
    return all(not x for x in m.entries())


def rank(m: flint.fmpq_mat) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return m.rank()


def _pivots(r: flint.fmpq_mat, rk: int) -> list[int]:
    piv = []
    col = 0
    for i in range(rk):
        while not r[i, col]:
            col += 1
        piv.append(col)
        col += 1
    return piv


def nullspace(m: flint.fmpq_mat) -> list[tuple]:
    """Basis of the right kernel, one vector per free column of the rref.

    The vector attached to free column j has a 1 in position j and zeros in
    every other free position, so the basis is canonical for a given matrix.
    """
    n = m.ncols()
    if m.nrows() == 0:
        return [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
    r, rk = m.rref()
    piv = _pivots(r, rk)
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for j in free:
        v = [ZERO] * n
        v[j] = ONE
        for i, p in enumerate(piv):
            v[p] = -r[i, j]
        basis.append(tuple(v))
    return basis


def solve(m: flint.fmpq_mat, b: Sequence) -> tuple | None:
    """One solution of m x = b with every free variable set to zero, or None."""
    n = m.ncols()
    aug = hstack([m, matrix([[x] for x in b]) if len(b) else fmpq_mat(0, 1)])
    r, rk = aug.rref()
    piv = _pivots(r, rk)
    if piv and piv[-1] == n:
        return None
    x = [ZERO] * n
    for i, p in enumerate(piv):
        x[p] = r[i, n]
    return tuple(x)


def column(v: Sequence) -> flint.fmpq_mat:
    return matrix([[x] for x in v])


def mat_vec(m: flint.fmpq_mat, v: Sequence) -> tuple:
    return tuple((m * column(v)).entries())


def span_rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return rank(matrix(vectors))
