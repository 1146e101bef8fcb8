"""Exact linear algebra: rational matrices, integer Smith normal form.

Gaussian elimination picks the first nonzero pivot so that runs are
reproducible; everything is Fraction arithmetic with zero tolerance.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularSystemError


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = [_frac(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(rows) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return RationalMatrix(r, c, flat)

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix(n, n, [Fraction(int(i == j))
                                     for i in range(n) for j in range(n)])

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            out = []
            for i in range(self.rows):
                ri = self.row(i)
                for j in range(other.cols):
                    out.append(sum((ri[k] * other.at(k, j)
                                    for k in range(self.cols)), Fraction(0)))
            return RationalMatrix(self.rows, other.cols, out)
        raise TypeError

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum((self.at(i, k) * _frac(vec[k]) for k in range(self.cols)),
                    Fraction(0)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              [self.at(i, j) for j in range(self.cols)
                               for i in range(self.rows)])

    def inverse(self) -> "RationalMatrix":
        if self.rows != self.cols:
            raise SingularSystemError("inverse of a nonsquare matrix")
        n = self.rows
        aug = [self.row(i) + RationalMatrix.identity(n).row(i)
               for i in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if aug[r][col] != 0:
                    piv = r
                    break
            if piv is None:
                raise SingularSystemError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = Fraction(1) / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return RationalMatrix.from_rows([row[n:] for row in aug])

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"


@dataclass
class SolveResult:
    """Outcome of an exact linear solve M x = b.

    ``solution`` is one particular solution (None when inconsistent),
    ``kernel`` a basis of the null space, and ``certificate`` a row
    combination y with y.M = 0 but y.b != 0 proving inconsistency.
    """

    solution: list | None
    kernel: list
    certificate: list | None

    @property
    def consistent(self) -> bool:
        return self.solution is not None


def solve_linear(m: RationalMatrix, b) -> SolveResult:
    """Exact Gauss-Jordan solve with kernel basis and inconsistency proof."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    rows = m.rows
    cols = m.cols
    # augmented layout: [ A | b | I ] with I tracking row operations
    aug = [m.row(i) + [_frac(b[i])]
           + [Fraction(int(i == j)) for j in range(rows)] for i in range(rows)]
    pivot_cols = []
    r = 0
    for col in range(cols):
        piv = None
        for i in range(r, rows):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = Fraction(1) / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * p for a, p in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return SolveResult(None, [], aug[i][cols + 1:])
    solution = [Fraction(0)] * cols
    for k, col in enumerate(pivot_cols):
        solution[col] = aug[k][cols]
    free_cols = [c for c in range(cols) if c not in pivot_cols]
    kernel = []
    for f in free_cols:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for k, col in enumerate(pivot_cols):
            vec[col] = -aug[k][f]
        kernel.append(vec)
    return SolveResult(solution, kernel, None)


# ---------------------------------------------------------------------------
# Integer matrices (lists of lists of int).


def _ident_int(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(mat):
    """(U, D, V) with D = U * mat * V diagonal, d_i | d_{i+1}, U, V unimodular."""
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = _ident_int(m)
    v = _ident_int(n)

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # smallest nonzero pivot in the remaining block
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best = x
                    piv = (i, j)
        if piv is None:
            break
        while True:
            i0, j0 = piv
            if i0 != t:
                row_swap(t, i0)
            if j0 != t:
                col_swap(t, j0)
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # enforce divisibility of the rest of the block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % a[t][t]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                row_op(t, bad, -1)
                piv = (t, t)
                continue
            # pick a fresh minimal pivot in the block and loop again
            piv = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = abs(a[i][j])
                    if x and (best is None or x < best):
                        best = x
                        piv = (i, j)
        if a[t][t] < 0:
            row_neg(t)
        t += 1
    return u, a, v


def solve_integer(mat, rhs):
    """Solve mat * z = rhs over the integers via Smith normal form.

    Returns (solution, kernel_basis) or (None, certificate) where the
    certificate is (row_index, divisor, value) of the failing congruence.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    if len(rhs) != m:
        raise ValueError("right-hand side length mismatch")
    u, d, v = smith_normal_form(mat)
    w = [sum(u[i][k] * rhs[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        di = d[i][i]
        if di:
            if w[i] % di:
                return None, (i, di, w[i])
            y[i] = w[i] // di
        elif w[i]:
            return None, (i, 0, w[i])
    for i in range(min(m, n), m):
        if w[i]:
            return None, (i, 0, w[i])
    z = [sum(v[i][k] * y[k] for k in range(n)) for i in range(n)]
    kernel = []
    for k in range(n):
        if k >= m or d[k][k] == 0:
            kernel.append([v[i][k] for i in range(n)])
    z = _reduce_against(z, kernel)
    return z, kernel


def _reduce_against(z, kernel):
    """Shrink a particular solution by greedy integer projections."""
    changed = True
    while changed:
        changed = False
        for k in kernel:
            kk = sum(x * x for x in k)
            if kk == 0:
                continue
            t = sum(a * b for a, b in zip(z, k))
            q = (2 * t + kk) // (2 * kk) if t >= 0 else -((-2 * t + kk) // (2 * kk))
            if q:
                z = [a - q * b for a, b in zip(z, k)]
                changed = True
    return z


def hermite_column_basis(vectors):
    """Column-echelon basis of the lattice spanned by integer vectors."""
    cols = [list(map(int, vec)) for vec in vectors if any(vec)]
    if not cols:
        return []
    m = len(cols[0])
    basis = []
    r = 0
    while r < m and cols:
        live = [c for c in cols if c[r] != 0]
        rest = [c for c in cols if c[r] == 0]
        if not live:
            cols = rest
            r += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[r]))
            piv = live[0]
            new_live = [piv]
            for c in live[1:]:
                q = c[r] // piv[r]
                c = [x - q * y for x, y in zip(c, piv)]
                if c[r] != 0:
                    new_live.append(c)
                elif any(c):
                    rest.append(c)
            live = new_live
        piv = live[0]
        if piv[r] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        cols = rest
        r += 1
    return basis
