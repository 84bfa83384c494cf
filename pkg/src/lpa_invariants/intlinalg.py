"""Exact integer linear algebra on arbitrary-precision matrices.

Determinants are computed by fraction-free (Bareiss) elimination, Smith
normal form tracks the unimodular row/column transforms, and circulant
determinants can be cross-checked against the roots-of-unity product
formula.
"""

from __future__ import annotations

import cmath
import functools
import operator
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "CirculantRow",
    "CirculantProduct",
    "det_exact",
    "smith_normal_form",
    "circulant_det_product",
    "diagonal_matrix",
]


def _coerce_rows(entries) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(operator.index(x) for x in row) for row in entries)
    if rows:
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("matrix rows must all have the same length")
    return rows


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of Python ints; arithmetic never overflows."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _coerce_rows(self.entries))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(tuple((0,) * cols for _ in range(rows)))

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")
        return IntMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = tuple(zip(*other.entries)) if other.entries else ()
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"IntMatrix({self.rows}x{self.cols}: [{body}])"


def diagonal_matrix(d, rows: int, cols: int) -> IntMatrix:
    """Matrix of the given shape with `d` down the main diagonal."""
    d = tuple(operator.index(x) for x in d)
    if len(d) != min(rows, cols):
        raise ValueError("diagonal length must be min(rows, cols)")
    return IntMatrix(
        tuple(
            tuple(d[i] if i == j and i < len(d) else 0 for j in range(cols))
            for i in range(rows)
        )
    )


def det_exact(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination.

    Intermediate values stay bounded by minors of the input, and every
    division is exact, so the result is correct for arbitrary integer
    entries.
    """
    if not m.is_square:
        raise ValueError(f"determinant requires a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    a = np.array(m.to_lists(), dtype=object)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k, k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i, k] != 0), None)
            if pivot_row is None:
                return 0
            a[[k, pivot_row]] = a[[pivot_row, k]]
            sign = -sign
        piv = a[k, k]
        a[k + 1 :, k + 1 :] = (
            a[k + 1 :, k + 1 :] * piv - np.outer(a[k + 1 :, k], a[k, k + 1 :])
        ) // prev
        prev = piv
    return int(sign * a[n - 1, n - 1])


@dataclass(frozen=True)
class SmithDecomposition:
    """u @ t @ v == diag(d) with u, v unimodular and d divisibility-ordered."""

    d: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix

    def diagonal(self, rows: int, cols: int) -> IntMatrix:
        return diagonal_matrix(self.d, rows, cols)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b == g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with explicit unimodular transforms.

    Classic Euclidean pivoting: gcd-reduce the pivot row/column, then
    repair the divisibility chain pairwise.  Diagonal entries come out
    nonnegative, divisibility-ordered, with zeros trailing, so the
    diagonal is the canonical invariant-factor sequence.
    """
    a = m.to_lists()
    nr, nc = m.rows, m.cols
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]
    k = min(nr, nc)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_sub(i: int, j: int, q: int) -> None:
        # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i: int, j: int, q: int) -> None:
        # col i -= q * col j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def row_combine(i: int, j: int, p: int, q: int, r: int, s: int) -> None:
        # rows (i, j) <- (p*ri + q*rj, r*ri + s*rj); caller guarantees |ps - qr| = 1
        a[i], a[j] = (
            [p * x + q * y for x, y in zip(a[i], a[j])],
            [r * x + s * y for x, y in zip(a[i], a[j])],
        )
        u[i], u[j] = (
            [p * x + q * y for x, y in zip(u[i], u[j])],
            [r * x + s * y for x, y in zip(u[i], u[j])],
        )

    def clear(t: int) -> None:
        # Move the smallest-magnitude nonzero of the trailing block to (t, t),
        # then gcd-reduce until row t and column t are zero off the pivot.
        best = None
        piv = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                x = row[j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            return
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        while True:
            i = next((i for i in range(t + 1, nr) if a[i][t]), None)
            if i is not None:
                row_sub(i, t, a[i][t] // a[t][t])
                if a[i][t]:
                    swap_rows(t, i)
                continue
            j = next((j for j in range(t + 1, nc) if a[t][j]), None)
            if j is not None:
                col_sub(j, t, a[t][j] // a[t][t])
                if a[t][j]:
                    swap_cols(t, j)
                continue
            break

    for t in range(k):
        clear(t)
    for t in range(k):
        if a[t][t] < 0:
            negate_row(t)

    # Repair the divisibility chain: replace a violating adjacent pair (x, y)
    # by (gcd, x*y/gcd).  Each fix strictly shrinks the earlier entry, so the
    # loop terminates.
    while True:
        t = next(
            (
                t
                for t in range(k - 1)
                if a[t][t] != 0 and a[t + 1][t + 1] % a[t][t] != 0
            ),
            None,
        )
        if t is None:
            break
        x, y = a[t][t], a[t + 1][t + 1]
        col_sub(t, t + 1, -1)  # col t += col t+1, putting y below the pivot
        g, s, w = _xgcd(x, y)
        row_combine(t, t + 1, s, w, -(y // g), x // g)
        col_sub(t + 1, t, (w * y) // g)

    d = tuple(a[t][t] for t in range(k))
    return SmithDecomposition(d=d, u=IntMatrix(u), v=IntMatrix(v))


@dataclass(frozen=True)
class CirculantRow:
    """First row (b1..bn) of an n x n circulant matrix."""

    b: tuple[int, ...]

    def __post_init__(self) -> None:
        b = tuple(operator.index(x) for x in self.b)
        if not b:
            raise ValueError("a circulant row needs at least one entry")
        object.__setattr__(self, "b", b)


class CirculantProduct(NamedTuple):
    factors: tuple[complex, ...]
    product: complex


def circulant_det_product(row: CirculantRow) -> CirculantProduct:
    """Determinant of a circulant matrix as a product over roots of unity.

    Factor j is b1 + b2*w + ... + bn*w^(n-1) evaluated at the n-th root of
    unity w = exp(2*pi*i*j/n); the determinant is the product of all n
    factors.  Floating-point complex arithmetic, so exact comparisons need
    a tolerance.
    """
    b = row.b
    n = len(b)
    factors = []
    for j in range(n):
        w = cmath.exp(2j * cmath.pi * j / n)
        acc: complex = 0
        for coeff in reversed(b):
            acc = acc * w + coeff
        factors.append(acc)
    product = functools.reduce(operator.mul, factors, complex(1))
    return CirculantProduct(factors=tuple(factors), product=product)
