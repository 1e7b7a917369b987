"""Exact linear algebra over the integers.

Smith normal form with unimodular transforms, integer kernel bases,
lattice solves, and invariant factors of subquotients of Z^k. All
arithmetic uses Python's arbitrary-precision integers; there are no
floats and no modular shortcuts anywhere in this module. Matrices with
zero rows or columns are legal everywhere and denote zero maps, which
the higher-level modules rely on for degenerate groups.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        ent = tuple(int(x) for x in self.entries)
        if len(ent) != self.rows * self.cols:
            raise ValueError(
                "expected %d entries, got %d" % (self.rows * self.cols, len(ent)))
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows, cols=None):
        """Build from an iterable of rows; ``cols`` disambiguates the empty case."""
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row length")
        else:
            width = 0 if cols is None else cols
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def from_cols(cls, cols, rows=None):
        """Build from an iterable of columns; ``rows`` disambiguates the empty case."""
        cols = [list(c) for c in cols]
        if cols:
            height = len(cols[0])
            if any(len(c) != height for c in cols):
                raise ValueError("ragged columns")
            if rows is not None and rows != height:
                raise ValueError("rows does not match column length")
        else:
            height = 0 if rows is None else rows
        return cls(height, len(cols),
                   tuple(cols[j][i] for i in range(height) for j in range(len(cols))))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag):
        diag = list(diag)
        n = len(diag)
        return cls(n, n, tuple(diag[i] if i == j else 0
                               for i in range(n) for j in range(n)))

    @classmethod
    def column_vector(cls, vec):
        vec = list(vec)
        return cls(len(vec), 1, tuple(vec))

    def entry(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("entry (%d, %d) out of range" % (i, j))
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         tuple(self.entries[i * self.cols + j]
                               for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch: %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                out.append(sum(ai[k] * b[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def mul_vec(self, vec):
        vec = list(vec)
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch: %dx%d matrix times length-%d vector"
                             % (self.rows, self.cols, len(vec)))
        return tuple(sum(self.entries[i * self.cols + k] * vec[k]
                         for k in range(self.cols)) for i in range(self.rows))

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("dimension mismatch: vstack %d and %d columns"
                             % (self.cols, other.cols))
        return IntMatrix(self.rows + other.rows, self.cols,
                         self.entries + other.entries)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("dimension mismatch: hstack %d and %d rows"
                             % (self.rows, other.rows))
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return IntMatrix(self.rows, self.cols + other.cols, tuple(out))

    def kron_identity(self, r):
        """Kronecker product with the r x r identity (each entry becomes e*I_r)."""
        if r < 0:
            raise ValueError("r must be nonnegative")
        out = []
        for i in range(self.rows):
            base = self.row(i)
            for s in range(r):
                for j in range(self.cols):
                    e = base[j]
                    for t in range(r):
                        out.append(e if s == t else 0)
        return IntMatrix(self.rows * r, self.cols * r, tuple(out))


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D the invariant-factor diagonal.

    The diagonal of D is d_1, ..., d_k, 0, ..., 0 with d_1 | d_2 | ... | d_k
    and every d_i >= 1; ``invariants`` is exactly (d_1, ..., d_k), so its
    length is the rank of A.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariants: tuple

    @property
    def rank(self):
        return len(self.invariants)


def smith_normal_form(A):
    """Smith normal form of an integer matrix, with transforms.

    Pivots are chosen by least absolute value, which keeps coefficient
    growth tame on the sparse matrices the cohomology routines produce.
    Works for any shape including empty ones.
    """
    m, n = A.rows, A.cols
    d = A.to_rows()
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(r0, r1):
        d[r0], d[r1] = d[r1], d[r0]
        u[r0], u[r1] = u[r1], u[r0]

    def swap_cols(c0, c1):
        for row in d:
            row[c0], row[c1] = row[c1], row[c0]
        for row in v:
            row[c0], row[c1] = row[c1], row[c0]

    def negate_row(r):
        d[r] = [-x for x in d[r]]
        u[r] = [-x for x in u[r]]

    def row_axpy(dst, src, q):
        # row dst -= q * row src, mirrored on U
        drow, srow = d[dst], d[src]
        for k in range(n):
            drow[k] -= q * srow[k]
        urow, usrc = u[dst], u[src]
        for k in range(m):
            urow[k] -= q * usrc[k]

    def col_axpy(dst, src, q):
        # col dst -= q * col src, mirrored on V
        for row in d:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    def least_nonzero(t):
        best, pos = None, None
        for i in range(t, m):
            di = d[i]
            for j in range(t, n):
                x = di[j]
                if x:
                    ax = -x if x < 0 else x
                    if best is None or ax < best:
                        best, pos = ax, (i, j)
                        if best == 1:
                            return pos
        return pos

    lim = min(m, n)
    t = 0
    while t < lim:
        pos = least_nonzero(t)
        if pos is None:
            break
        while True:
            i0, j0 = pos
            if i0 != t:
                swap_rows(t, i0)
            if j0 != t:
                swap_cols(t, j0)
            if d[t][t] < 0:
                negate_row(t)
            p = d[t][t]
            for i in range(t + 1, m):
                x = d[i][t]
                if x:
                    row_axpy(i, t, x // p)
            for j in range(t + 1, n):
                x = d[t][j]
                if x:
                    col_axpy(j, t, x // p)
            # leftover cross entries are remainders with |x| < p: re-pivot
            dirty = any(d[i][t] for i in range(t + 1, m)) or \
                any(d[t][j] for j in range(t + 1, n))
            if dirty:
                pos = least_nonzero(t)
                continue
            bad = None
            for i in range(t + 1, m):
                di = d[i]
                for j in range(t + 1, n):
                    if di[j] % p:
                        bad = (i, j)
                        break
                if bad:
                    break
            if bad is None:
                break
            # fold the offending row into the cross so the next pass shrinks the pivot
            row_axpy(t, bad[0], -1)
            pos = (t, t)
        t += 1

    invariants = tuple(d[k][k] for k in range(lim) if d[k][k] != 0)
    return SmithDecomposition(
        U=IntMatrix.from_rows(u, cols=m),
        D=IntMatrix.from_rows(d, cols=n),
        V=IntMatrix.from_rows(v, cols=n),
        invariants=invariants,
    )


def rank(A):
    """Rank of A over Q (equivalently over Z)."""
    return smith_normal_form(A).rank


def invert_unimodular(M):
    """Inverse of a unimodular integer matrix.

    Uses U M V = I to return V @ U. Raises ValueError if M is not square
    with determinant +-1.
    """
    if M.rows != M.cols:
        raise ValueError("dimension mismatch: only square matrices can be unimodular")
    s = smith_normal_form(M)
    if len(s.invariants) != M.rows or any(x != 1 for x in s.invariants):
        raise ValueError("matrix is not unimodular")
    return s.V @ s.U


def kernel_basis(A):
    """Basis of the integer kernel of A, as columns of a cols x k matrix.

    The returned basis is saturated: it spans ker(A) over Q, and the span
    over Z is a direct summand of Z^cols (the basis extends to a basis of
    the ambient lattice because it consists of columns of a unimodular
    matrix).
    """
    s = smith_normal_form(A)
    return IntMatrix.from_cols([s.V.col(j) for j in range(s.rank, A.cols)],
                               rows=A.cols)


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """A finitely generated abelian group in canonical invariant-factor form.

    Z^free_rank (+) Z_{t_1} (+) ... (+) Z_{t_k} with every t_i >= 2 and
    t_1 | t_2 | ... | t_k.
    """

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        tor = tuple(int(t) for t in self.torsion)
        for t in tor:
            if t < 2:
                raise ValueError("torsion orders must be >= 2, got %d" % t)
        for a, b in zip(tor, tor[1:]):
            if b % a:
                raise ValueError("torsion orders must form a divisibility chain")
        object.__setattr__(self, "torsion", tor)

    @classmethod
    def trivial(cls):
        return cls(0, ())

    @classmethod
    def free(cls, k):
        return cls(k, ())

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def direct_sum(self, other):
        mixed = self.torsion + other.torsion
        recanon = quotient_invariants(len(mixed), IntMatrix.diagonal(mixed))
        return AbelianGroupInvariants(self.free_rank + other.free_rank,
                                      recanon.torsion)

    def repeat(self, r):
        """Direct sum of r copies (coefficient modules Z^r act one copy at a time)."""
        if r < 0:
            raise ValueError("r must be nonnegative")
        return AbelianGroupInvariants(self.free_rank * r,
                                      tuple(t for t in self.torsion
                                            for _ in range(r)))

    def to_json(self):
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data):
        return cls(data["free"], tuple(data["torsion"]))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z_%d" % t for t in self.torsion)
        return " (+) ".join(parts) if parts else "0"


def quotient_invariants(ambient_rank, gens):
    """Invariants of Z^ambient_rank / (column span of gens)."""
    if gens.rows != ambient_rank:
        raise ValueError("dimension mismatch: generators live in Z^%d, ambient rank is %d"
                         % (gens.rows, ambient_rank))
    s = smith_normal_form(gens)
    return AbelianGroupInvariants(ambient_rank - s.rank,
                                  tuple(x for x in s.invariants if x > 1))


def _solve_many(A, B):
    """Integer solutions X of A @ X = B, or None if some column has none."""
    if A.rows != B.rows:
        raise ValueError("dimension mismatch: %d equations, rhs has %d rows"
                         % (A.rows, B.rows))
    s = smith_normal_form(A)
    C = s.U @ B
    r = s.rank
    cols = []
    for j in range(B.cols):
        w = [0] * A.cols
        for i in range(A.rows):
            ci = C.entry(i, j)
            if i < r:
                di = s.D.entry(i, i)
                if ci % di:
                    return None
                w[i] = ci // di
            elif ci:
                return None
        cols.append(s.V.mul_vec(w))
    return IntMatrix.from_cols(cols, rows=A.cols)


def solve_in_lattice(A, b):
    """One integer solution x of A x = b, or None if b is not in the column lattice."""
    X = _solve_many(A, IntMatrix.column_vector(b))
    return X.col(0) if X is not None else None


def subquotient_invariants(out_map, in_map):
    """Invariants of ker(out_map) / im(in_map).

    Requires out_map @ in_map = 0; raises ValueError("not a complex")
    otherwise. Works by expressing the image inside the saturated kernel
    basis, where integer coordinates always exist.
    """
    if out_map.cols != in_map.rows:
        raise ValueError("dimension mismatch: maps do not compose")
    if not (out_map @ in_map).is_zero():
        raise ValueError("not a complex")
    K = kernel_basis(out_map)
    coords = _solve_many(K, in_map)
    if coords is None:
        raise AssertionError("saturated kernel basis must admit integer coordinates")
    return quotient_invariants(K.cols, coords)
