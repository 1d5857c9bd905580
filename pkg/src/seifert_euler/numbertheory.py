"""
Exact integer arithmetic used everywhere else in the package: extended gcd,
Chinese remaindering for moduli that need not be coprime, and Smith normal
form with unimodular transforms.

Rationals are plain ``fractions.Fraction`` values (always stored reduced with
a positive denominator), exported here as ``Rational``.
"""
from fractions import Fraction
from math import gcd

Rational = Fraction


def ext_gcd(a, b):
    """
    Return (g, x, y) with g = gcd(|a|, |b|) >= 0 and a*x + b*y = g.

    >>> ext_gcd(6, 4)
    (2, 1, -1)
    >>> ext_gcd(0, 0)
    (0, 0, 0)
    """
    old_r, r = abs(a), abs(b)
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r == 0:
        return 0, 0, 0
    sx = -1 if a < 0 else 1
    sy = -1 if b < 0 else 1
    return old_r, sx * old_x, sy * old_y


def inverse_mod(a, m):
    """Inverse of a modulo m >= 1, or None when gcd(a, m) != 1."""
    g, x, _ = ext_gcd(a, m)
    if g != 1:
        return None
    return x % m


class CongruenceSystem:
    """
    A finite list of congruences m = r (mod M), stored as (residue, modulus)
    pairs with modulus >= 1.
    """

    def __init__(self, pairs=()):
        self.pairs = []
        for r, mod in pairs:
            if mod < 1:
                raise ValueError(f"modulus must be >= 1, got {mod}")
            self.pairs.append((r, mod))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f"CongruenceSystem({self.pairs!r})"


def solve_crt(system):
    """
    Solve a system of congruences with arbitrary (possibly non-coprime)
    moduli by pairwise merging.

    Accepts a ``CongruenceSystem`` or any iterable of (residue, modulus).
    Returns (m0, L) with 0 <= m0 < L = lcm of the moduli, so that the
    solutions are exactly m0 + rL, or None if the system is inconsistent.

    >>> solve_crt([(1, 4), (3, 6)])
    (9, 12)
    >>> solve_crt([(1, 4), (2, 6)]) is None
    True
    """
    if not isinstance(system, CongruenceSystem):
        system = CongruenceSystem(system)
    m0, L = 0, 1
    for r, mod in system:
        g, p, _ = ext_gcd(L, mod)
        diff = r - m0
        if diff % g:
            return None
        step = mod // g
        # L*p = g (mod mod), so t = (diff/g)*p solves L*t = diff (mod mod)
        t = (diff // g) * p % step
        m0 += L * t
        L *= step
        m0 %= L
    return m0, L


def lcm(*values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


class IntegerMatrix:
    """
    Dense matrix of Python ints, row-major.  Treated as an immutable value:
    operations return new matrices.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(int(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return IntegerMatrix(
            self.cols, self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ocols = [other.column(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                out.extend(sum(x * y for x, y in zip(r, c)) for c in ocols)
            return IntegerMatrix(self.rows, other.cols, out)
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum(x * y for x, y in zip(self.row(i), vec)) for i in range(self.rows)]

    def diagonal(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self):
        return all(self[i, j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def determinant(self):
        """Exact determinant (Bareiss fraction-free elimination)."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()!r})"


def _min_nonzero(S, t, rows, cols):
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = S[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
    return best


def smith_normal_form(A):
    """
    Smith normal form of an integer matrix.

    Returns (U, S, V) with U and V unimodular and U @ A @ V == S, where S is
    diagonal with nonnegative entries d1 | d2 | ... ; zero diagonal entries
    come last.  Pivots are chosen with minimal absolute value.
    """
    if not isinstance(A, IntegerMatrix):
        A = IntegerMatrix.from_rows(A)
    m, n = A.rows, A.cols
    S = A.tolist()
    U = IntegerMatrix.identity(m).tolist()
    V = IntegerMatrix.identity(n).tolist()

    def swap_rows(i, k):
        S[i], S[k] = S[k], S[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in S:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        S[dst] = [x + q * y for x, y in zip(S[dst], S[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in S:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        best = _min_nonzero(S, t, m, n)
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    if S[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    if S[t][j]:
                        clean = False
            if not clean:
                # a smaller remainder now sits in row or column t
                cand = [(abs(S[i][t]), i, t) for i in range(t + 1, m) if S[i][t]]
                cand += [(abs(S[t][j]), t, j) for j in range(t + 1, n) if S[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(i, t)
                if j != t:
                    swap_cols(j, t)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]

    return (IntegerMatrix.from_rows(U, m), IntegerMatrix.from_rows(S, n),
            IntegerMatrix.from_rows(V, n))


def invariant_factors(A):
    """Diagonal of the Smith normal form of A."""
    _, S, _ = smith_normal_form(A)
    return S.diagonal()


def lattice_member(B, v):
    """
    Solve B x = v over the integers.

    Returns an integer list x with B @ x == v exactly, or None when v is not
    in the column lattice of B.
    """
    if not isinstance(B, IntegerMatrix):
        B = IntegerMatrix.from_rows(B)
    v = list(v)
    if len(v) != B.rows:
        raise ValueError(f"vector of length {len(v)} for a matrix with {B.rows} rows")
    U, S, V = smith_normal_form(B)
    w = U @ v
    y = [0] * B.cols
    for i in range(B.rows):
        d = S[i, i] if i < B.cols else 0
        if d == 0:
            if w[i] != 0:
                return None
        else:
            if w[i] % d:
                return None
            y[i] = w[i] // d
    return V @ y
