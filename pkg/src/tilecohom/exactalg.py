"""Exact integer linear algebra: Smith normal form, kernels, lattice solves.

Everything runs on Python's arbitrary-precision ints; there is no floating
point anywhere.  Matrices are immutable, so values can be shared freely
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass


class ExactAlgError(Exception):
    pass


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ExactAlgError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ExactAlgError(
                "entry count %d does not match %dx%d"
                % (len(self.entries), self.rows, self.cols)
            )

    @staticmethod
    def from_rows(rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ExactAlgError("ragged rows")
        return IntMatrix(n, m, tuple(int(x) for r in rows for x in r))

    @staticmethod
    def zero(rows, cols):
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    @staticmethod
    def identity(n):
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def from_columns(columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ExactAlgError("cannot infer row count from zero columns")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise ExactAlgError("ragged columns")
        return IntMatrix(rows, len(columns),
                         tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ExactAlgError("index out of range")
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ExactAlgError("shape mismatch in product")
            rows = []
            for i in range(self.rows):
                ri = self.row(i)
                rows.append([sum(ri[k] * other[k, j] for k in range(self.cols))
                             for j in range(other.cols)])
            return IntMatrix(self.rows, other.cols, tuple(x for r in rows for x in r))
        raise TypeError("can only multiply by IntMatrix")

    def mul_vector(self, vec):
        vec = list(vec)
        if len(vec) != self.cols:
            raise ExactAlgError("vector length mismatch")
        return tuple(sum(self.row(i)[k] * vec[k] for k in range(self.cols))
                     for i in range(self.rows))

    def hstack(self, other):
        if self.rows != other.rows:
            raise ExactAlgError("row mismatch in hstack")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return IntMatrix.from_rows(rows) if rows else IntMatrix.zero(0, self.cols + other.cols)

    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def diagonal(self):
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


@dataclass(frozen=True)
class SnfResult:
    """U * A * V = S with U, V unimodular and S the Smith normal form of A."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self):
        return tuple(d for d in self.S.diagonal() if d != 0)

    @property
    def rank(self):
        return len(self.invariant_factors)


def _smallest_pivot(a, t):
    """Position of the nonzero entry of least magnitude in a[t:, t:], or None."""
    best = None
    best_val = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            v = a[i][j]
            if v != 0 and (best_val is None or abs(v) < best_val):
                best, best_val = (i, j), abs(v)
                if best_val == 1:
                    return best
    return best


def _egcd(a, b):
    """(g, x, y) with g = gcd(a, b) = x a + y b, g >= 0, small x and y."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Diagonalise A over the integers.

    Gcd-driven row/column reduction.  The pivot is re-selected as the entry of
    least magnitude in the remaining submatrix after every remainder round,
    which keeps coefficient growth tame; the divisibility chain is enforced
    afterwards by explicit Bezout 2x2 transforms on adjacent diagonal entries.
    The diagonal is normalised to d1 | d2 | ... with all entries nonnegative.
    """
    n, m = A.rows, A.cols
    a = A.to_rows()
    u = IntMatrix.identity(n).to_rows()
    v = IntMatrix.identity(m).to_rows()

    def row_op(i, k, q):  # row i -= q * row k
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_op(j, k, q):  # col j -= q * col k
        for r in a:
            r[j] -= q * r[k]
        for r in v:
            r[j] -= q * r[k]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    t = 0
    while t < n and t < m:
        pos = _smallest_pivot(a, t)
        if pos is None:
            break
        # One remainder round per pivot choice; any leftover remainder is
        # strictly smaller than the pivot, so re-selecting terminates.
        while True:
            i, j = pos
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = a[t][t]
            clean = True
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        row_op(i, t, q)
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, m):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        col_op(j, t, q)
                    if a[t][j]:
                        clean = False
            if clean:
                break
            pos = _smallest_pivot(a, t)
        t += 1

    r = t
    for i in range(r):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    # Enforce d_i | d_{i+1} by replacing adjacent pairs with (gcd, lcm):
    # [[x, y], [-b/g, a/g]] . diag(a, b) . [[1, -y b/g], [1, x a/g]]
    # equals diag(g, a b/g), and both transforms are unimodular.
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            da, db = a[i][i], a[i + 1][i + 1]
            if db % da == 0:
                continue
            g, x, y = _egcd(da, db)
            pa, pb = da // g, db // g
            u[i], u[i + 1] = ([x * s + y * t2 for s, t2 in zip(u[i], u[i + 1])],
                              [-pb * s + pa * t2 for s, t2 in zip(u[i], u[i + 1])])
            a[i], a[i + 1] = ([x * s + y * t2 for s, t2 in zip(a[i], a[i + 1])],
                              [-pb * s + pa * t2 for s, t2 in zip(a[i], a[i + 1])])
            for row in (a, v):
                for rr in row:
                    rr[i], rr[i + 1] = (rr[i] + rr[i + 1],
                                        -y * pb * rr[i] + x * pa * rr[i + 1])
            changed = True

    U = IntMatrix.from_rows(u) if n else IntMatrix.zero(0, 0)
    V = IntMatrix.from_rows(v) if m else IntMatrix.zero(0, 0)
    S = IntMatrix.from_rows(a) if a else IntMatrix.zero(n, m)
    if n == 0 or m == 0:
        S = IntMatrix.zero(n, m)
    return SnfResult(U=U, S=S, V=V)


def rank(A: IntMatrix) -> int:
    return smith_normal_form(A).rank


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel {x : A x = 0}, as matrix columns.

    The kernel of an integer matrix is automatically a saturated sublattice,
    and the returned basis spans it exactly: cols(A) - rank(A) columns.
    """
    if A.cols == 0:
        return IntMatrix.zero(0, 0)
    if A.rows == 0:
        return IntMatrix.identity(A.cols)
    snf = smith_normal_form(A)
    r = snf.rank
    cols = [snf.V.column(j) for j in range(r, A.cols)]
    if not cols:
        return IntMatrix.zero(A.cols, 0)
    return IntMatrix.from_columns(cols, rows=A.cols)


def solve_in_lattice(A: IntMatrix, b) -> tuple | None:
    """Some integer x with A x = b, or None if b is outside the column span."""
    b = [int(x) for x in b]
    if len(b) != A.rows:
        raise ExactAlgError("rhs length %d != %d rows" % (len(b), A.rows))
    if A.cols == 0:
        return () if all(x == 0 for x in b) else None
    snf = smith_normal_form(A)
    y = snf.U.mul_vector(b)
    r = snf.rank
    xprime = [0] * A.cols
    for i in range(A.rows):
        d = snf.S[i, i] if i < min(A.rows, A.cols) else 0
        if i < r:
            if y[i] % d != 0:
                return None
            xprime[i] = y[i] // d
        elif y[i] != 0:
            return None
    return snf.V.mul_vector(xprime)


def determinant(A: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise ExactAlgError("determinant of non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    a = A.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(A: IntMatrix) -> bool:
    return A.rows == A.cols and abs(determinant(A)) == 1


def inverse_unimodular(A: IntMatrix) -> IntMatrix:
    """Integer inverse of a unimodular matrix (from U A V = I: A^-1 = V U)."""
    if A.rows != A.cols:
        raise ExactAlgError("inverse of non-square matrix")
    snf = smith_normal_form(A)
    if any(d != 1 for d in snf.S.diagonal()) or snf.rank != A.rows:
        raise ExactAlgError("matrix is not unimodular")
    return snf.V * snf.U


def column_span_basis(A: IntMatrix) -> IntMatrix:
    """Basis (columns) of the lattice spanned by the columns of A."""
    if A.cols == 0 or A.rows == 0:
        return IntMatrix.zero(A.rows, 0)
    snf = smith_normal_form(A)
    uinv = inverse_unimodular(snf.U)
    cols = []
    for i in range(snf.rank):
        d = snf.S[i, i]
        cols.append([d * x for x in uinv.column(i)])
    if not cols:
        return IntMatrix.zero(A.rows, 0)
    return IntMatrix.from_columns(cols, rows=A.rows)
