"""Dense linear algebra over a Field.

Matrices are tuples/lists of rows of int codes.  Everything here is small
(dimensions up to a few dozen), so plain Gaussian elimination is enough;
the heavy per-codeword work lives in :mod:`polycodes.lincode` instead.
"""

from __future__ import annotations

from typing import Sequence

from .gf import Field

Matrix = list[list[int]]


def rref(field: Field, rows: Sequence[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, x) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(field: Field, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(field, rows)[0])


def null_space(field: Field, rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of {x : rows . x^T = 0}, one vector per non-pivot column."""
    red, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(field: Field, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimensions do not match")
    nb = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * nb
        for i, x in enumerate(row):
            if x:
                bi = b[i]
                for j in range(nb):
                    if bi[j]:
                        acc[j] = field.add(acc[j], field.mul(x, bi[j]))
        out.append(acc)
    return out


def vec_mat(field: Field, v: Sequence[int], a: Sequence[Sequence[int]]) -> list[int]:
    return mat_mul(field, [list(v)], a)[0]


def mat_vec(field: Field, a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = field.add(acc, field.mul(x, y))
        out.append(acc)
    return out


def dot(field: Field, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = field.add(acc, field.mul(x, y))
    return acc


def det(field: Field, rows: Sequence[Sequence[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    d = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pr is None:
            return 0
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            d = field.neg(d)
        d = field.mul(d, a[c][c])
        inv = field.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = field.mul(inv, a[i][c])
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[c])]
    return d


def inverse(field: Field, rows: Sequence[Sequence[int]]) -> Matrix:
    n = len(rows)
    aug = [list(r) + ident for r, ident in zip(rows, identity(n))]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def in_row_space(field: Field, rows: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether v lies in the row space of `rows` (given in any form)."""
    base, _ = rref(field, rows)
    return rank(field, base + [list(v)]) == len(base)
