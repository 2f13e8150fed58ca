"""Exact integer matrix arithmetic: Smith normal form, kernels, solving.

Matrices are rectangular lists of lists of Python ints, row major.  All
arithmetic is exact; nothing here touches floating point.  The Smith
normal form keeps both transforms so results can be re-checked by
multiplication, and pivot selection is deterministic (smallest absolute
value, then lowest row, then lowest column) so witnesses are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Matrix = list  # list[list[int]]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def shape(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    m, p = shape(a)
    p2, n = shape(b)
    if p != p2:
        # allow the degenerate 0-column / 0-row case where either factor is empty
        if p == 0 or p2 == 0:
            return zeros(m, n)
        raise ValueError(f"shape mismatch {shape(a)} x {shape(b)}")
    out = zeros(m, n)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for k in range(p):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(n):
                    oi[j] += aik * bk[j]
    return out


def transpose(a: Matrix) -> Matrix:
    m, n = shape(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def copy(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def determinant(a: Matrix) -> int:
    """Bareiss fraction-free determinant (exact)."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = copy(a)
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


def rank_rational(a: Matrix) -> int:
    """Rank over Q by plain fraction elimination.

    Kept deliberately independent of the Smith normal form code so the two
    can cross-check each other.
    """
    m, n = shape(a)
    rows = [[Fraction(x) for x in row] for row in a]
    rank = 0
    col = 0
    while rank < m and col < n:
        pivot = None
        for i in range(rank, m):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, m):
            f = rows[i][col] / pv
            if f:
                for j in range(col, n):
                    rows[i][j] -= f * rows[rank][j]
        rank += 1
        col += 1
    return rank


@dataclass(frozen=True)
class SnfResult:
    """left * input * right == diagonal, transforms unimodular."""
    left: Matrix
    diagonal: Matrix
    right: Matrix

    def diagonal_entries(self) -> list:
        m, n = shape(self.diagonal)
        return [self.diagonal[i][i] for i in range(min(m, n))]

    def rank(self) -> int:
        return sum(1 for d in self.diagonal_entries() if d != 0)

    def invariant_factors(self) -> list:
        return [d for d in self.diagonal_entries() if d != 0]

    def validate(self, original: Matrix) -> list:
        """Return a list of violated invariants (empty when sound)."""
        bad = []
        if matmul(matmul(self.left, original), self.right) != self.diagonal:
            bad.append("left*input*right != diagonal")
        if abs(determinant(self.left)) != 1:
            bad.append("left transform not unimodular")
        if abs(determinant(self.right)) != 1:
            bad.append("right transform not unimodular")
        diag = self.diagonal_entries()
        m, n = shape(self.diagonal)
        for i in range(m):
            for j in range(n):
                if i != j and self.diagonal[i][j] != 0:
                    bad.append("diagonal has off-diagonal entries")
                    break
        if any(d < 0 for d in diag):
            bad.append("negative diagonal entry")
        facs = [d for d in diag if d != 0]
        for a, b in zip(facs, facs[1:]):
            if b % a != 0:
                bad.append(f"divisibility broken: {a} does not divide {b}")
        if any(d != 0 for d in diag[len(facs):]) :
            bad.append("zero diagonal entry before a nonzero one")
        return bad


def _pivot(a: Matrix, start: int) -> tuple | None:
    """Smallest |entry| > 0 in the trailing submatrix; ties by row then column."""
    m, n = shape(a)
    best = None
    for i in range(start, m):
        row = a[i]
        for j in range(start, n):
            v = row[j]
            if v:
                key = (abs(v), i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(a: Matrix) -> SnfResult:
    m, n = shape(a)
    d = copy(a)
    left = identity(m)
    right = identity(n)

    def row_sub(i, k, q):  # row_i -= q * row_k
        di, dk, li, lk = d[i], d[k], left[i], left[k]
        for j in range(n):
            di[j] -= q * dk[j]
        for j in range(m):
            li[j] -= q * lk[j]

    def col_sub(j, k, q):  # col_j -= q * col_k
        for i in range(m):
            d[i][j] -= q * d[i][k]
        for i in range(n):
            right[i][j] -= q * right[i][k]

    def row_swap(i, k):
        d[i], d[k] = d[k], d[i]
        left[i], left[k] = left[k], left[i]

    def col_swap(j, k):
        for i in range(m):
            d[i][j], d[i][k] = d[i][k], d[i][j]
        for i in range(n):
            right[i][j], right[i][k] = right[i][k], right[i][j]

    for l in range(min(m, n)):
        while True:
            pos = _pivot(d, l)
            if pos is None:
                break
            pi, pj = pos
            if pi != l:
                row_swap(l, pi)
            if pj != l:
                col_swap(l, pj)
            # euclidean clearing of column l and row l
            dirty = False
            for i in range(l + 1, m):
                if d[i][l]:
                    q = d[i][l] // d[l][l]
                    row_sub(i, l, q)
                    if d[i][l]:
                        dirty = True
            for j in range(l + 1, n):
                if d[l][j]:
                    q = d[l][j] // d[l][l]
                    col_sub(j, l, q)
                    if d[l][j]:
                        dirty = True
            if dirty:
                continue  # remainders left; re-pick pivot (strictly smaller now)
            # divisibility: pivot must divide the whole trailing block
            fixed = True
            for i in range(l + 1, m):
                if not fixed:
                    break
                for j in range(l + 1, n):
                    if d[i][j] % d[l][l] != 0:
                        row_sub(l, i, -1)  # row_l += row_i, then re-clear
                        fixed = False
                        break
            if fixed:
                break
        if d[l][l] < 0:
            row_sub(l, l, 2)  # row_l -= 2*row_l, i.e. negate
    return SnfResult(left=left, diagonal=d, right=right)


def snf_diagonal(a: Matrix) -> list:
    return smith_normal_form(a).diagonal_entries()


def rank(a: Matrix) -> int:
    return smith_normal_form(a).rank()


def kernel_basis(a: Matrix) -> list:
    """Basis of the integer kernel, as column vectors (lists of ints).

    Columns of the right transform whose diagonal entry vanishes form a
    saturated basis, so integral cycles always have integral coordinates.
    """
    m, n = shape(a)
    snf = smith_normal_form(a)
    diag = snf.diagonal
    basis = []
    for j in range(n):
        dj = diag[j][j] if j < m else 0
        if dj == 0:
            basis.append([snf.right[i][j] for i in range(n)])
    return basis


def solve(a: Matrix, b: list) -> list | None:
    """One integral solution x of a x = b, or None if none exists."""
    m, n = shape(a)
    if len(b) != m:
        raise ValueError("rhs length mismatch")
    snf = smith_normal_form(a)
    lb = [sum(snf.left[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        di = snf.diagonal[i][i] if i < n else 0
        if di == 0:
            if lb[i] != 0:
                return None
        else:
            if lb[i] % di != 0:
                return None
            y[i] = lb[i] // di
    return [sum(snf.right[i][k] * y[k] for k in range(n)) for i in range(n)]


def columns(a: Matrix) -> list:
    m, n = shape(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def from_columns(cols: list, nrows: int) -> Matrix:
    return [[col[i] for col in cols] for i in range(nrows)]
