"""
Closed-form decision of whether the Euler class of the normal bundle to the
Seifert fibres vanishes.

The class vanishes iff some integer m satisfies m*a_i = 1 (mod b_i) for every
cone point and m*e(M) = chi(B).  The congruences are solved once by CRT,
giving m = m0 (mod L); the second condition then either pins m down
(e(M) != 0) or reduces to chi(B) = 0 (e(M) = 0).
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import Optional

import numpy as np

from .invariants import (
    euler_number, normalize, orbifold_euler_char, torsion_order,
)
from .numbertheory import ext_gcd, inverse_mod, solve_crt


class Reason(Enum):
    N0_BUNDLE = "n0-bundle"
    CONGRUENCE_INCONSISTENT = "congruence-inconsistent"
    EULER_CHAR_MISMATCH = "euler-char-mismatch"
    WITNESS = "witness"
    EULER_NUMBER_ZERO_CHI_NONZERO = "euler-number-zero-chi-nonzero"
    CHI_ZERO_EULER_ZERO = "chi-zero-euler-zero"


@dataclass(frozen=True)
class VanishingVerdict:
    vanishes: bool
    witness_m: Optional[int]
    reason: Reason

    def to_dict(self):
        return {"vanishes": self.vanishes, "witness_m": self.witness_m,
                "reason": self.reason.value}


def congruence_solution(inv):
    """(m0, L) solving m*a_i = 1 (mod b_i) for all i, or None."""
    system = []
    for a_i, b_i in inv.cone:
        r = inverse_mod(a_i, b_i)
        if r is None:
            return None
        system.append((r, b_i))
    return solve_crt(system)


def euler_class_vanishes(inv):
    """Decide vanishing of e(nu_M); the witness is a valid m when it vanishes."""
    inv = normalize(inv)
    e = euler_number(inv)
    chi = orbifold_euler_char(inv)

    if inv.n == 0:
        # m*b = 2 - 2g
        if inv.b == 0:
            if chi == 0:
                return VanishingVerdict(True, 0, Reason.N0_BUNDLE)
            return VanishingVerdict(False, None, Reason.N0_BUNDLE)
        q, r = divmod(chi.numerator, inv.b)
        if r == 0:
            return VanishingVerdict(True, q, Reason.N0_BUNDLE)
        return VanishingVerdict(False, None, Reason.N0_BUNDLE)

    sol = congruence_solution(inv)
    if sol is None:
        return VanishingVerdict(False, None, Reason.CONGRUENCE_INCONSISTENT)
    m0, L = sol

    if e == 0:
        if chi == 0:
            return VanishingVerdict(True, m0, Reason.CHI_ZERO_EULER_ZERO)
        return VanishingVerdict(False, None, Reason.EULER_NUMBER_ZERO_CHI_NONZERO)

    ratio = chi / e
    if ratio.denominator != 1 or (ratio.numerator - m0) % L:
        return VanishingVerdict(False, None, Reason.EULER_CHAR_MISMATCH)
    return VanishingVerdict(True, ratio.numerator, Reason.WITNESS)


def check_witness(inv, m):
    """True iff m satisfies both vanishing conditions for inv."""
    if any((m * a_i - 1) % b_i for a_i, b_i in inv.cone):
        return False
    return m * euler_number(inv) == orbifold_euler_char(inv)


def is_circle_bundle_over_torus(inv):
    return inv.genus == 1 and inv.n == 0


def necessary_condition(inv):
    """
    Divisibility condition implied by vanishing: torus circle bundle, or
    e(M) = chi(B) = 0, or both nonzero with chi(B)/e(M) an integer.
    """
    if is_circle_bundle_over_torus(inv):
        return True
    e = euler_number(inv)
    chi = orbifold_euler_char(inv)
    if e == 0 and chi == 0:
        return True
    if e != 0 and chi != 0:
        return (chi / e).denominator == 1
    return False


def gcd_necessary_condition(inv):
    """a_i = a_j (mod gcd(b_i, b_j)) for every pair of cone points."""
    cone = normalize(inv).cone
    for i, (a_i, b_i) in enumerate(cone):
        for a_j, b_j in cone[i + 1:]:
            d = gcd(b_i, b_j)
            if (a_i - a_j) % d:
                return False
    return True


def torsion_divisibility_check(inv):
    """
    Whether b_1...b_n chi(B) is an integer multiple of |T_1(M)|.
    Only defined for e(M) != 0.
    """
    if euler_number(inv) == 0:
        raise ValueError("torsion divisibility check requires e(M) != 0")
    value = prod(inv.cone_orders) * orbifold_euler_char(inv)
    if value.denominator != 1:
        return False
    return value.numerator % torsion_order(inv) == 0


# Batch evaluation over many tuples sharing the same cone orders.

@lru_cache(maxsize=None)
def _inverse_table(modulus):
    table = np.full(modulus, -1, dtype=np.int64)
    for a in range(modulus):
        r = inverse_mod(a, modulus)
        if r is not None:
            table[a] = r
    return table


def vanishing_grid(orders, numerators, b_values, genus_values):
    """
    Vectorized ``euler_class_vanishes`` for all tuples
    (g; b, a_1/orders_1, ..., a_n/orders_n) with rows of ``numerators``
    giving the a_i, b ranging over ``b_values`` and g over ``genus_values``.

    Returns (vanishes, witness) arrays of shape (K, len(b_values),
    len(genus_values)); witness entries are meaningful only where the class
    vanishes and agree with the scalar witness.
    """
    orders = [int(o) for o in orders]
    n = len(orders)
    A = np.asarray(numerators, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, n)
    K = A.shape[0]
    bv = np.asarray(list(b_values), dtype=np.int64)
    gv = np.asarray(list(genus_values), dtype=np.int64)

    ok = np.ones(K, dtype=bool)
    m0 = np.zeros(K, dtype=np.int64)
    L = 1
    for i, o in enumerate(orders):
        r = _inverse_table(o)[A[:, i] % o]
        ok &= r >= 0
        g, p, _ = ext_gcd(L, o)
        diff = r - m0
        ok &= diff % g == 0
        step = o // g
        t = (diff // g) * p % step
        m0 = (m0 + L * t) % (L * step)
        L *= step

    # e(M) = E / L and chi(B) = X / L with integer E, X
    S = (A * np.array([L // o for o in orders], dtype=np.int64)).sum(axis=1)
    T = sum(L // o for o in orders)
    E = bv[None, :, None] * L + S[:, None, None]
    X = ((2 - 2 * gv - n) * L + T)[None, None, :]
    E, X = np.broadcast_arrays(E, X)
    nz = E != 0
    safe = np.where(nz, E, 1)
    quotient = X // safe
    divisible = X % safe == 0
    m0b = m0[:, None, None]
    vanish_nz = nz & divisible & ((quotient - m0b) % L == 0)
    vanish_z = ~nz & (X == 0)
    vanishes = ok[:, None, None] & (vanish_nz | vanish_z)
    witness = np.where(nz, quotient, np.broadcast_to(m0b, E.shape))
    return vanishes, witness
