"""Sparse exact matrices with labelled bases, Smith normal form, linear solving.

Vectors ("chains") are dicts mapping basis labels to nonzero ring elements.
Matrices act on column vectors: (M v)[r] = sum_c M[r,c] v[c].
"""


def vec_clean(ring, v):
    return {k: x for k, x in v.items() if not ring.is_zero(x)}


def vec_add(ring, u, v):
    out = dict(u)
    for k, x in v.items():
        out[k] = ring.add(out.get(k, ring.zero()), x)
    return vec_clean(ring, out)


def vec_scale(ring, a, v):
    if ring.is_zero(a):
        return {}
    return vec_clean(ring, {k: ring.mul(a, x) for k, x in v.items()})


def vec_sub(ring, u, v):
    return vec_add(ring, u, vec_scale(ring, ring.from_int(-1), v))


def vec_is_zero(ring, v):
    return all(ring.is_zero(x) for x in v.values())


def vec_eq(ring, u, v):
    return vec_is_zero(ring, vec_sub(ring, u, v))


def vec_dot(ring, u, v):
    s = ring.zero()
    for k, x in u.items():
        if k in v:
            s = ring.add(s, ring.mul(x, v[k]))
    return s


class Matrix:
    """Sparse matrix over an exact ring with explicit row/column basis labels."""

    def __init__(self, ring, row_labels, col_labels, entries=None):
        self.ring = ring
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        self.row_index = {lbl: i for i, lbl in enumerate(self.row_labels)}
        self.col_index = {lbl: i for i, lbl in enumerate(self.col_labels)}
        if len(self.row_index) != len(self.row_labels):
            raise ValueError("duplicate row labels")
        if len(self.col_index) != len(self.col_labels):
            raise ValueError("duplicate column labels")
        self.entries = {}
        if entries:
            for (r, c), val in entries.items():
                if r not in self.row_index or c not in self.col_index:
                    raise KeyError(f"label ({r!r}, {c!r}) outside declared bases")
                if not ring.is_zero(val):
                    self.entries[(r, c)] = val

    @property
    def shape(self):
        return (len(self.row_labels), len(self.col_labels))

    def entry(self, r, c):
        return self.entries.get((r, c), self.ring.zero())

    @classmethod
    def zero(cls, ring, row_labels, col_labels):
        return cls(ring, row_labels, col_labels)

    @classmethod
    def identity(cls, ring, labels):
        labels = tuple(labels)
        return cls(ring, labels, labels, {(l, l): ring.one() for l in labels})

    @classmethod
    def from_dense(cls, ring, row_labels, col_labels, rows):
        row_labels = tuple(row_labels)
        col_labels = tuple(col_labels)
        entries = {}
        for i, row in enumerate(rows):
            for j, val in enumerate(row):
                val = val if not isinstance(val, int) else ring.from_int(val)
                if not ring.is_zero(val):
                    entries[(row_labels[i], col_labels[j])] = val
        return cls(ring, row_labels, col_labels, entries)

    @classmethod
    def from_columns(cls, ring, row_labels, col_labels, columns):
        """columns: list of vectors (dicts keyed by row label)."""
        entries = {}
        for j, col in enumerate(columns):
            for r, val in col.items():
                if not ring.is_zero(val):
                    entries[(r, col_labels[j])] = val
        return cls(ring, row_labels, col_labels, entries)

    def to_dense(self):
        z = self.ring.zero()
        out = [[z] * len(self.col_labels) for _ in self.row_labels]
        for (r, c), val in self.entries.items():
            out[self.row_index[r]][self.col_index[c]] = val
        return out

    def column(self, c):
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def apply(self, vec):
        """Matrix times column vector (dict keyed by col labels)."""
        ring = self.ring
        out = {}
        for (r, c), val in self.entries.items():
            if c in vec:
                out[r] = ring.add(out.get(r, ring.zero()), ring.mul(val, vec[c]))
        return vec_clean(ring, out)

    def __matmul__(self, other):
        if self.col_labels != other.row_labels:
            raise ValueError("basis mismatch in matrix product")
        ring = self.ring
        by_row = {}
        for (r, c), val in other.entries.items():
            by_row.setdefault(r, []).append((c, val))
        entries = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                key = (r, c)
                entries[key] = ring.add(entries.get(key, ring.zero()), ring.mul(a, b))
        return Matrix(ring, self.row_labels, other.col_labels, entries)

    def __add__(self, other):
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            raise ValueError("basis mismatch in matrix sum")
        ring = self.ring
        entries = dict(self.entries)
        for key, val in other.entries.items():
            entries[key] = ring.add(entries.get(key, ring.zero()), val)
        return Matrix(ring, self.row_labels, self.col_labels, entries)

    def scale(self, a):
        ring = self.ring
        return Matrix(ring, self.row_labels, self.col_labels,
                      {k: ring.mul(a, v) for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + other.scale(self.ring.from_int(-1))

    def transpose(self):
        return Matrix(self.ring, self.col_labels, self.row_labels,
                      {(c, r): v for (r, c), v in self.entries.items()})

    def is_zero(self):
        return all(self.ring.is_zero(v) for v in self.entries.values())

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            return False
        return (self - other).is_zero()

    def __repr__(self):
        return f"Matrix({self.ring.name}, {len(self.row_labels)}x{len(self.col_labels)})"


def hstack(ring, row_labels, mats):
    """Concatenate matrices with common rows; column labels tagged (i, label)."""
    col_labels = []
    entries = {}
    for i, m in enumerate(mats):
        if tuple(m.row_labels) != tuple(row_labels):
            raise ValueError("row basis mismatch in hstack")
        for c in m.col_labels:
            col_labels.append((i, c))
        for (r, c), v in m.entries.items():
            entries[(r, (i, c))] = v
    return Matrix(ring, row_labels, col_labels, entries)


class SNF:
    """Smith normal form data: U * M * V = D with U, V invertible.

    diagonals lists the nonzero invariant factors d_1 | d_2 | ... (canonical
    associates); rank = len(diagonals).
    """

    def __init__(self, matrix, U, Uinv, V, Vinv, diagonals):
        self.matrix = matrix
        self.U = U
        self.Uinv = Uinv
        self.V = V
        self.Vinv = Vinv
        self.diagonals = diagonals
        self.rank = len(diagonals)

    @property
    def D(self):
        ring = self.matrix.ring
        rows = self.matrix.row_labels
        cols = self.matrix.col_labels
        entries = {}
        for i, d in enumerate(self.diagonals):
            entries[(rows[i], cols[i])] = d
        return Matrix(ring, rows, cols, entries)


def _gcd_combine(ring, x, y):
    """For x != 0: return (a, b, c, d, g) with a*x + b*y = g, det [[a,b],[c,d]] = 1
    and c*x + d*y = 0."""
    # extended Euclid in the ring (terminates: Euclidean)
    r0, r1 = x, y
    a0, a1 = ring.one(), ring.zero()
    b0, b1 = ring.zero(), ring.one()
    while not ring.is_zero(r1):
        q, r = ring.divmod(r0, r1)
        r0, r1 = r1, r
        a0, a1 = a1, ring.sub(a0, ring.mul(q, a1))
        b0, b1 = b1, ring.sub(b0, ring.mul(q, b1))
    g = r0
    # g = a0*x + b0*y ; second row (-y/g, x/g) kills the pair with det 1
    c = ring.neg(ring.div(y, g))
    d = ring.div(x, g)
    return a0, b0, c, d, g


def smith_normal_form(M):
    """Return SNF of M with all four transformation matrices, exactly."""
    ring = M.ring
    m, n = M.shape
    A = M.to_dense()
    idm = [[ring.one() if i == j else ring.zero() for j in range(m)] for i in range(m)]
    idn = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    U = [row[:] for row in idm]
    Uinv = [row[:] for row in idm]
    V = [row[:] for row in idn]
    Vinv = [row[:] for row in idn]

    def row_transform(i, j, a, b, c, d, det):
        # rows i,j of A and U <- (a ri + b rj, c ri + d rj); Uinv gets inverse cols
        for X in (A, U):
            ri, rj = X[i], X[j]
            X[i] = [ring.add(ring.mul(a, x), ring.mul(b, y)) for x, y in zip(ri, rj)]
            X[j] = [ring.add(ring.mul(c, x), ring.mul(d, y)) for x, y in zip(ri, rj)]
        dinv = ring.inv(det)
        tii, tij = ring.mul(d, dinv), ring.mul(ring.neg(b), dinv)
        tji, tjj = ring.mul(ring.neg(c), dinv), ring.mul(a, dinv)
        for row in Uinv:
            ci, cj = row[i], row[j]
            row[i] = ring.add(ring.mul(ci, tii), ring.mul(cj, tji))
            row[j] = ring.add(ring.mul(ci, tij), ring.mul(cj, tjj))

    def col_transform(i, j, a, b, c, d, det):
        # cols i,j of A and V <- combos; Vinv gets inverse rows
        for X in (A, V):
            for row in X:
                ci, cj = row[i], row[j]
                row[i] = ring.add(ring.mul(a, ci), ring.mul(b, cj))
                row[j] = ring.add(ring.mul(c, ci), ring.mul(d, cj))
        # the column op is V <- V*T with T = [[a,c],[b,d]] on the (i,j) block,
        # so Vinv picks up Tinv = [[d,-c],[-b,a]]/det on the left
        dinv = ring.inv(det)
        tii, tij = ring.mul(d, dinv), ring.mul(ring.neg(c), dinv)
        tji, tjj = ring.mul(ring.neg(b), dinv), ring.mul(a, dinv)
        ri, rj = Vinv[i], Vinv[j]
        Vinv[i] = [ring.add(ring.mul(tii, x), ring.mul(tij, y)) for x, y in zip(ri, rj)]
        Vinv[j] = [ring.add(ring.mul(tji, x), ring.mul(tjj, y)) for x, y in zip(ri, rj)]

    def swap_rows(i, j):
        if i != j:
            row_transform(i, j, ring.zero(), ring.one(), ring.one(), ring.zero(),
                          ring.from_int(-1))

    def swap_cols(i, j):
        if i != j:
            col_transform(i, j, ring.zero(), ring.one(), ring.one(), ring.zero(),
                          ring.from_int(-1))

    def size(x):
        # pivot preference: small magnitude speeds integer SNF; fields don't care
        try:
            return abs(x)
        except TypeError:
            return 1

    t = 0
    limit = min(m, n)
    while t < limit:
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if not ring.is_zero(A[i][j]):
                    if pivot is None or size(A[i][j]) < size(A[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            for i in range(t + 1, m):
                if ring.is_zero(A[i][t]):
                    continue
                q, r = ring.divmod(A[i][t], A[t][t])
                if ring.is_zero(r):
                    row_transform(t, i, ring.one(), ring.zero(),
                                  ring.neg(q), ring.one(), ring.one())
                else:
                    a, b, c, d, _ = _gcd_combine(ring, A[t][t], A[i][t])
                    row_transform(t, i, a, b, c, d, ring.one())
            for j in range(t + 1, n):
                if ring.is_zero(A[t][j]):
                    continue
                q, r = ring.divmod(A[t][j], A[t][t])
                if ring.is_zero(r):
                    col_transform(t, j, ring.one(), ring.zero(),
                                  ring.neg(q), ring.one(), ring.one())
                else:
                    a, b, c, d, _ = _gcd_combine(ring, A[t][t], A[t][j])
                    col_transform(t, j, a, b, c, d, ring.one())
            col_clear = all(ring.is_zero(A[i][t]) for i in range(t + 1, m))
            row_clear = all(ring.is_zero(A[t][j]) for j in range(t + 1, n))
            if not (col_clear and row_clear):
                continue
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if not ring.divides(A[t][t], A[i][j]):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # pull the offending row up so its entries join the pivot's orbit
            row_transform(t, offender, ring.one(), ring.one(),
                          ring.zero(), ring.one(), ring.one())
        u = ring.canonical_unit(A[t][t])
        if not ring.is_zero(ring.sub(u, ring.one())):
            # scale row t by the unit u (1x1 row transform)
            A[t] = [ring.mul(u, x) for x in A[t]]
            U[t] = [ring.mul(u, x) for x in U[t]]
            uinv = ring.inv(u)
            for row in Uinv:
                row[t] = ring.mul(row[t], uinv)
        t += 1

    diagonals = [A[i][i] for i in range(t) if not ring.is_zero(A[i][i])]
    rows, cols = M.row_labels, M.col_labels
    Um = Matrix.from_dense(ring, rows, rows, U)
    Uim = Matrix.from_dense(ring, rows, rows, Uinv)
    Vm = Matrix.from_dense(ring, cols, cols, V)
    Vim = Matrix.from_dense(ring, cols, cols, Vinv)
    return SNF(M, Um, Uim, Vm, Vim, diagonals)


def solve(M, b, snf=None):
    """One solution x of M x = b (dict keyed by col labels), or None."""
    ring = M.ring
    s = snf if snf is not None else smith_normal_form(M)
    c = s.U.apply(b)
    z = {}
    for i, d in enumerate(s.diagonals):
        lbl = M.row_labels[i]
        ci = c.pop(lbl, ring.zero())
        if not ring.divides(d, ci):
            return None
        z[M.col_labels[i]] = ring.div(ci, d)
    if not vec_is_zero(ring, c):
        return None
    return vec_clean(ring, s.V.apply(z))


def kernel_basis(M, snf=None):
    """Basis of the kernel of M (saturated over Z), as column vectors."""
    s = snf if snf is not None else smith_normal_form(M)
    out = []
    for j in range(s.rank, len(M.col_labels)):
        out.append(s.V.column(M.col_labels[j]))
    return out
