"""Exact integer and rational linear algebra.

Everything here works on plain Python integers (arbitrary precision) and
:class:`fractions.Fraction`.  Matrices are lists of rows.  The functions are
pure: inputs are never modified.

The Smith normal form uses a fixed pivoting rule (smallest nonzero absolute
value, ties broken by lowest row then lowest column), so repeated runs on the
same input return identical transformation matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence

Matrix = List[List[int]]


class DimensionError(ValueError):
    """Raised when matrix shapes do not fit the requested operation."""


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------

def as_int_matrix(m) -> Matrix:
    """Copy ``m`` (nested sequence or numpy array) into a list of int rows."""
    rows = [[int(v) for v in row] for row in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionError("ragged matrix")
    return rows


def as_fraction_matrix(m) -> List[List[Fraction]]:
    return [[Fraction(v) for v in row] for row in m]


def shape(m) -> tuple:
    if not m:
        return (0, 0)
    return (len(m), len(m[0]))


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    """Exact product of two matrices (ints or Fractions)."""
    if a and b and len(a[0]) != len(b):
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def bilinear(gram, u, v):
    """``u^T gram v``."""
    return dot(u, mat_vec(gram, v))


def diag(entries, rows=None, cols=None) -> Matrix:
    n = len(entries)
    rows = n if rows is None else rows
    cols = n if cols is None else cols
    out = [[0] * cols for _ in range(rows)]
    for i, d in enumerate(entries):
        out[i][i] = d
    return out


def block_diag(*blocks) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[k + i][k + j] = v
        k += len(b)
    return out


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SnfResult:
    """``u * m * v == diag(d)`` with unimodular ``u`` and ``v``.

    ``d`` has length ``min(rows, cols)``; the nonzero entries come first and
    each divides the next.
    """

    d: tuple
    u: tuple
    v: tuple

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x != 0)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, src, dst, k):
    """row[dst] += k * row[src]"""
    if k:
        rs, rd = m[src], m[dst]
        for c in range(len(rd)):
            rd[c] += k * rs[c]


def _add_col(m, src, dst, k):
    """col[dst] += k * col[src]"""
    if k:
        for row in m:
            row[dst] += k * row[src]


def snf(m) -> SnfResult:
    """Smith normal form of an integer matrix with transformation matrices.

    Examples
    --------
    >>> snf([[0, 2], [2, 0]]).d
    (2, 2)
    """
    a = as_int_matrix(m)
    r, c = shape(a)
    if r == 0 or c == 0:
        return SnfResult(d=(), u=tuple(tuple(x) for x in identity(r)),
                         v=tuple(tuple(x) for x in identity(c)))
    u = identity(r)
    v = identity(c)
    t = 0
    while t < min(r, c):
        # choose pivot: smallest |entry| in the trailing block
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            _swap_rows(a, pi, t)
            _swap_rows(u, pi, t)
        if pj != t:
            _swap_cols(a, pj, t)
            _swap_cols(v, pj, t)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, r):
                if a[i][t]:
                    q = a[i][t] // p
                    _add_row(a, t, i, -q)
                    _add_row(u, t, i, -q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, c):
                if a[t][j]:
                    q = a[t][j] // p
                    _add_col(a, t, j, -q)
                    _add_col(v, t, j, -q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a remainder is smaller than the pivot: move it into place
                best = None
                for i in range(t, r):
                    x = a[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, c):
                    x = a[t][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), t, j)
                _, pi, pj = best
                if pi != t:
                    _swap_rows(a, pi, t)
                    _swap_rows(u, pi, t)
                if pj != t:
                    _swap_cols(a, pj, t)
                    _swap_cols(v, pj, t)
                continue
            # row and column cleared; enforce divisibility of the rest
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            _add_row(a, bad, t, 1)
            _add_row(u, bad, t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    d = tuple(a[i][i] for i in range(min(r, c)))
    return SnfResult(d=d, u=tuple(tuple(x) for x in u), v=tuple(tuple(x) for x in v))


# ---------------------------------------------------------------------------
# determinants, rank, kernels
# ---------------------------------------------------------------------------

def det_exact(m) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    a = as_int_matrix(m)
    n, k = shape(a)
    if n != k:
        raise DimensionError(f"determinant of a non-square {n}x{k} matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for i in range(t + 1, n):
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        p = a[t][t]
        for i in range(t + 1, n):
            ai = a[i]
            f = ai[t]
            for j in range(t + 1, n):
                ai[j] = (ai[j] * p - f * a[t][j]) // prev
            ai[t] = 0
        prev = p
    return sign * a[n - 1][n - 1]


def det_rational(m) -> Fraction:
    """Determinant of a square rational matrix."""
    a = as_fraction_matrix(m)
    n, k = shape(a)
    if n != k:
        raise DimensionError(f"determinant of a non-square {n}x{k} matrix")
    if n == 0:
        return Fraction(1)
    den = 1
    for row in a:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [[int(x * den) for x in row] for row in a]
    return Fraction(det_exact(ints), den ** n)


def rref(m):
    """Reduced row echelon form over Q.  Returns (rows, pivot_columns)."""
    a = as_fraction_matrix(m)
    r, c = shape(a)
    pivots = []
    row = 0
    for col in range(c):
        piv = next((i for i in range(row, r) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        if p != 1:
            a[row] = [x / p for x in a[row]]
        for i in range(r):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                ai, ar = a[i], a[row]
                a[i] = [x - f * y for x, y in zip(ai, ar)]
        pivots.append(col)
        row += 1
        if row == r:
            break
    return a, pivots


def rank_rational(m) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def rank_int(m) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    a = as_int_matrix(m)
    r, c = shape(a)
    rank = 0
    prev = 1
    for col in range(c):
        piv = next((i for i in range(rank, r) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, r):
            f = a[i][col]
            if f:
                ai = a[i]
                ar = a[rank]
                for j in range(col, c):
                    ai[j] = (ai[j] * p - f * ar[j]) // prev
            else:
                ai = a[i]
                for j in range(col, c):
                    ai[j] = (ai[j] * p) // prev
        prev = p
        rank += 1
        if rank == r:
            break
    return rank


def nullspace_rational(m) -> List[List[Fraction]]:
    """Basis of the right null space over Q (one vector per free column)."""
    r, c = shape(m)
    if r == 0:
        return [[Fraction(int(i == j)) for i in range(c)] for j in range(c)]
    red, pivots = rref(m)
    free = [j for j in range(c) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * c
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -red[i][f]
        basis.append(vec)
    return basis


def kernel_basis(m) -> List[List[int]]:
    """Basis of the integer null lattice ``{v in Z^n : m v = 0}``.

    The basis is read from the Smith form, so it spans a saturated lattice.
    """
    a = as_int_matrix(m)
    r, c = shape(a)
    if c == 0:
        return []
    if r == 0:
        return identity(c)
    res = snf(a)
    v = res.v
    k = res.rank
    return [[v[i][j] for i in range(c)] for j in range(k, c)]


def inverse_rational(m) -> List[List[Fraction]]:
    n, k = shape(m)
    if n != k:
        raise DimensionError("inverse of a non-square matrix")
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def solve_rational(m, b) -> List[Fraction]:
    """Solve ``m x = b`` for square invertible ``m``."""
    inv = inverse_rational(m)
    return mat_vec(inv, [Fraction(x) for x in b])


def lcm_denominators(values: Iterable[Fraction]) -> int:
    den = 1
    for x in values:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return den


def hermite_row_basis(rows: Sequence[Sequence[int]]) -> Matrix:
    """A basis (as rows) of the integer row span of ``rows``.

    Uses the Smith form of the generator matrix: the first ``rank`` rows of
    ``diag(d) * v^{-1}`` span the same lattice.
    """
    a = as_int_matrix(rows)
    if not a:
        return []
    res = snf(a)
    k = res.rank
    vinv = inverse_int_unimodular(res.v)
    return [[res.d[i] * x for x in vinv[i]] for i in range(k)]


def inverse_int_unimodular(m) -> Matrix:
    inv = inverse_rational(m)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def symmetric_signature(gram) -> tuple:
    """(positive, negative, zero) counts of a symmetric rational matrix.

    Works by congruence transformations only (no floating point): pivot on a
    nonzero diagonal entry when one exists, otherwise create one from a
    nonzero off-diagonal entry.
    """
    a = as_fraction_matrix(gram)
    n, k = shape(a)
    if n != k:
        raise DimensionError("signature of a non-square matrix")
    pos = neg = zero = 0
    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in idx for j in idx if i < j and a[i][j] != 0), None)
            if pair is None:
                zero += len(idx)
                break
            i, j = pair
            # replace e_i by e_i + e_j: new a_ii = 2 a_ij != 0
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in idx if i != piv]
        for i in rest:
            f = a[i][piv] / p
            if f:
                for t in rest:
                    a[i][t] -= f * a[piv][t]
        for i in rest:
            a[i][piv] = a[piv][i] = Fraction(0)
        idx = rest
    return pos, neg, zero
