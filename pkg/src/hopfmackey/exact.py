"""Exact rational linear algebra: fraction-free elimination, kernels, subspaces.

Matrices are plain nested sequences of ``Fraction``/``int``. Elimination is
carried out on integer rows (denominators cleared per row, content removed
after every update) so intermediate entries stay small; only the final
reduced row-echelon basis is expressed in rationals.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vector = tuple[Fraction, ...]
Matrix = Sequence[Sequence[Fraction | int]]


def _as_integer_row(row: Sequence[Fraction | int]) -> list[int]:
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        return [x // g for x in row]
    return row


def echelon_integer(rows: Matrix, ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero echelon rows (primitive integer vectors) and their pivot
    columns. Among candidate pivot rows the one with the smallest nonzero
    absolute value in the pivot column is chosen.
    """
    work = [_primitive(_as_integer_row(r)) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        cands = [i for i in range(r, len(work)) if work[i][col] != 0]
        if not cands:
            continue
        best = min(cands, key=lambda i: abs(work[i][col]))
        work[r], work[best] = work[best], work[r]
        p = work[r][col]
        for i in range(r + 1, len(work)):
            a = work[i][col]
            if a:
                work[i] = _primitive([p * x - a * y for x, y in zip(work[i], work[r])])
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rref(rows: Matrix, ncols: int | None = None) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row-echelon form of the row space (zero rows dropped)."""
    ech, pivots = echelon_integer(rows, ncols)
    out = [[Fraction(x) for x in row] for row in ech]
    for k in range(len(out) - 1, -1, -1):
        col = pivots[k]
        p = out[k][col]
        out[k] = [x / p for x in out[k]]
        for i in range(k):
            a = out[i][col]
            if a:
                out[i] = [x - a * y for x, y in zip(out[i], out[k])]
    return tuple(tuple(r) for r in out), tuple(pivots)


def rank(rows: Matrix, ncols: int | None = None) -> int:
    return len(echelon_integer(rows, ncols)[0])


def kernel(matrix: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : matrix @ x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    red, pivots = rref(matrix, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def matmul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def matvec(a: Matrix, v: Sequence[Fraction | int]) -> Vector:
    return tuple(sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


class RationalSubspace:
    """Subspace of Q^n stored by its canonical RREF basis."""

    __slots__ = ("n", "basis", "pivots")

    def __init__(self, n: int, vectors: Sequence[Sequence[Fraction | int]] = ()):
        self.n = n
        if vectors:
            self.basis, self.pivots = rref(vectors, n)
        else:
            self.basis, self.pivots = (), ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Fraction | int]) -> bool:
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        return rank(list(self.basis) + [list(v)], self.n) == self.dim

    def issubspace(self, other: RationalSubspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, RationalSubspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        rows = ["(" + ", ".join(str(x) for x in r) + ")" for r in self.basis]
        return f"RationalSubspace(n={self.n}, basis=[{', '.join(rows)}])"


def column_space(matrix: Matrix) -> RationalSubspace:
    n = len(matrix)
    return RationalSubspace(n, [list(c) for c in zip(*matrix)])


def eigenspace_exact(matrix: Matrix, eigenvalue: Fraction | int) -> RationalSubspace:
    """Kernel of ``matrix - eigenvalue * I`` as an exact subspace."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("eigenspace_exact needs a square matrix")
    lam = Fraction(eigenvalue)
    shifted = [[Fraction(matrix[i][j]) - (lam if i == j else 0) for j in range(n)] for i in range(n)]
    return RationalSubspace(n, kernel(shifted, n))
