"""
Independent vanishing oracle built on the presentation of H^2 of the base
orbifold group: generators A_0, ..., A_n with relations A_0 = b_i A_i.

The normal bundle has trivial Euler class iff the class of the Fuchsian
representation, (n - chi(|B|)) A_0 - A_1 - ... - A_n, is an integer multiple
of the extension class -(b A_0 + a_1 A_1 + ... + a_n A_n).  Membership is
decided with integer linear algebra only; nothing here uses the closed-form
congruence criterion.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .invariants import normalize
from .numbertheory import IntegerMatrix, lattice_member, lcm, smith_normal_form


@dataclass(frozen=True)
class H2Presentation:
    orders: tuple

    @property
    def n(self):
        return len(self.orders)

    @property
    def relation_matrix(self):
        """n x (n+1); row i is A_0 - b_i A_i."""
        n = self.n
        rows = []
        for i, b_i in enumerate(self.orders):
            row = [0] * (n + 1)
            row[0] = 1
            row[i + 1] = -b_i
            rows.append(row)
        return IntegerMatrix.from_rows(rows, n + 1)


def presentation(inv):
    return H2Presentation(tuple(inv.cone_orders))


@dataclass(frozen=True)
class CohomologyClass:
    """Coefficients of A_0, A_1, ..., A_n."""
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __sub__(self, other):
        return CohomologyClass(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, m):
        return CohomologyClass(tuple(m * x for x in self.coeffs))


def euler_class_extension(inv):
    return CohomologyClass((-inv.b,) + tuple(-a for a, _ in inv.cone))


def euler_class_dfr(inv):
    chi_surface = 2 - 2 * inv.genus
    return CohomologyClass((inv.n - chi_surface,) + (-1,) * inv.n)


def normal_form(cls, pres):
    """Reduce each A_i coefficient into [0, b_i) by trading b_i A_i for A_0."""
    if len(cls.coeffs) != pres.n + 1:
        raise ValueError("class and presentation sizes differ")
    d = cls.coeffs[0]
    cs = []
    for c, b_i in zip(cls.coeffs[1:], pres.orders):
        q, r = divmod(c, b_i)
        d += q
        cs.append(r)
    return CohomologyClass((d,) + tuple(cs))


@lru_cache(maxsize=None)
def _quotient_coordinates(orders):
    """
    Coordinates on H^2 from the SNF U R V = D of the relation lattice R (as
    columns).  Returns (W, diag): x lies in the lattice iff (W x)_j = 0
    (mod diag_j) for every j, where modulus 0 means exact equality.

    W is U with each torsion row reduced modulo its invariant factor, which
    keeps entries small without changing any test.
    """
    pres = H2Presentation(orders)
    R = pres.relation_matrix.transpose()
    U, S, _ = smith_normal_form(R)
    diag = [S[j, j] if j < S.cols else 0 for j in range(S.rows)]
    rows = [[x % d for x in U.row(j)] if d else U.row(j) for j, d in enumerate(diag)]
    return IntegerMatrix.from_rows(rows, S.rows), tuple(diag)


def class_order(cls, pres):
    """Order of a class in H^2, or 0 if it has infinite order."""
    U, diag = _quotient_coordinates(pres.orders)
    w = U @ list(cls.coeffs)
    order = 1
    for x, d in zip(w, diag):
        if d == 0:
            if x:
                return 0
        else:
            order = lcm(order, d // gcd(d, x))
    return order


def vanishes_via_oracle(inv):
    """
    An integer m with e(phi) = m e(E_M) in H^2, or None if there is none.
    When several m work the least nonnegative one is returned.
    """
    inv = normalize(inv)
    pres = presentation(inv)
    ext = euler_class_extension(inv)
    target = euler_class_dfr(inv)
    # columns: the n relation vectors, then e(E_M)
    rel = pres.relation_matrix.tolist()
    cols = rel + [list(ext.coeffs)]
    B = IntegerMatrix.from_rows(cols, pres.n + 1).transpose()
    x = lattice_member(B, target.coeffs)
    if x is None:
        return None
    m = x[-1]
    period = class_order(ext, pres)
    if period:
        m %= period
    return m


def is_multiple(target, ext, m, pres):
    """Whether target - m*ext is zero in H^2."""
    diff = target - ext.scale(m)
    return not any(normal_form(diff, pres).coeffs)


# Batch form

def _vec_ext_gcd(a, b):
    """Elementwise (g, x) with a*x = g (mod b), g = gcd(a, b); a, b >= 0."""
    a = a.copy()
    b = b.copy()
    x0 = np.ones_like(a)
    x1 = np.zeros_like(a)
    while np.any(b):
        nz = b != 0
        q = np.where(nz, a // np.where(nz, b, 1), 0)
        a, b = np.where(nz, b, a), np.where(nz, a - q * b, b)
        x0, x1 = np.where(nz, x1, x0), np.where(nz, x0 - q * x1, x1)
    return a, x0


def oracle_grid(orders, numerators, b_values, genus_values):
    """
    Vectorized oracle over the same grid as ``eulerclass.vanishing_grid``.

    Works in the quotient coordinates of the relation lattice: we need m with
    m * (U e_ext)_j = (U e_phi)_j modulo d_j for every coordinate j.
    Returns (exists, m) arrays of shape (K, len(b_values), len(genus_values));
    m is meaningful where a multiple exists.
    """
    orders = tuple(int(o) for o in orders)
    n = len(orders)
    A = np.asarray(numerators, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, n)
    K = A.shape[0]
    bv = np.asarray(list(b_values), dtype=np.int64)
    gv = np.asarray(list(genus_values), dtype=np.int64)
    U, diag = _quotient_coordinates(orders)
    Un = np.array(U.tolist(), dtype=np.int64).reshape(n + 1, n + 1)
    if Un.size and np.abs(Un).max() > 2 ** 24:
        raise OverflowError("transform too large for int64 batch evaluation")
    shape = (K, len(bv), len(gv))

    # e(E_M) = (-b, -a_1, ..., -a_n);  e(phi) = (n - 2 + 2g, -1, ..., -1)
    ext_tail = -A @ Un[:, 1:].T                       # (K, n+1)
    ext = ext_tail[:, None, :] - bv[None, :, None] * Un[None, None, :, 0]
    phi_tail = -Un[:, 1:].sum(axis=1)                 # (n+1,)
    phi = phi_tail[None, :] + (n - 2 + 2 * gv)[:, None] * Un[None, :, 0]
    c = np.broadcast_to(ext[:, :, None, :], shape + (n + 1,))
    s = np.broadcast_to(phi[None, None, :, :], shape + (n + 1,))

    exact = [j for j, d in enumerate(diag) if d == 0]
    torsion = [j for j, d in enumerate(diag) if d > 1]

    exists = np.ones(shape, dtype=bool)
    fixed = np.zeros(shape, dtype=bool)
    m = np.zeros(shape, dtype=np.int64)
    for j in exact:
        cj, sj = c[..., j], s[..., j]
        nz = cj != 0
        safe = np.where(nz, cj, 1)
        cand = sj // safe
        good = nz & (sj % safe == 0)
        exists &= np.where(nz, good & (~fixed | (m == cand)), sj == 0)
        m = np.where(nz & ~fixed, cand, m)
        fixed |= nz

    # pinned m: verify the torsion coordinates directly
    for j in torsion:
        d = diag[j]
        ok = (s[..., j] - m * c[..., j]) % d == 0
        exists &= np.where(fixed, ok, True)

    # free m: solve c_j m = s_j (mod d_j) jointly
    free = exists & ~fixed
    if np.any(free) and torsion:
        idx = np.nonzero(free)
        R = np.zeros(len(idx[0]), dtype=np.int64)
        M = np.ones(len(idx[0]), dtype=np.int64)
        good = np.ones(len(idx[0]), dtype=bool)
        for j in torsion:
            d = diag[j]
            cj = c[..., j][idx] % d
            sj = s[..., j][idx] % d
            g, x = _vec_ext_gcd(cj, np.full_like(cj, d))
            good &= sj % g == 0
            mod = d // g
            r = (sj // np.where(good, g, 1)) * x % mod
            G, P = _vec_ext_gcd(M % mod, mod)
            diff = r - R
            good &= diff % G == 0
            step = mod // G
            t = (diff // G) * P % step
            R = (R + M * t) % (M * step)
            M = M * step
        exists[idx] = good
        m[idx] = R
    return exists, m
