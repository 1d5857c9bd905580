import random

import numpy as np
from hypothesis import given

from conftest import invariants
from seifert_euler import SeifertInvariants, euler_class_vanishes, normalize, vanishes_via_oracle
from seifert_euler.cohomology import (
    class_order, euler_class_dfr, euler_class_extension, is_multiple, normal_form, oracle_grid,
    presentation,
)
from seifert_euler.eulerclass import check_witness
from seifert_euler.applications.census import _numerator_choices


def test_presentation_relations():
    pres = presentation(SeifertInvariants(0, -1, ((1, 2), (1, 3))))
    assert pres.relation_matrix.tolist() == [[1, -2, 0], [1, 0, -3]]


def test_normal_form_reduces_each_generator():
    pres = presentation(SeifertInvariants(0, 0, ((1, 2), (1, 3))))
    ext = euler_class_extension(SeifertInvariants(0, 1, ((5, 2), (-4, 3))))
    nf = normal_form(ext, pres)
    assert all(0 <= c < b for c, b in zip(nf.coeffs[1:], pres.orders))
    # -A_1 = -2A_1 + A_1 = -A_0 + A_1, etc.
    assert normal_form(nf, pres) == nf


def test_orders():
    inv = SeifertInvariants(0, -1, ((1, 2), (1, 3), (1, 5)))
    pres = presentation(inv)
    # H^2 is Z with A_0 of index 30 and e(E_M) of infinite order
    assert class_order(euler_class_extension(inv), pres) == 0
    assert class_order(euler_class_dfr(inv) - euler_class_extension(inv).scale(1), pres) == 1


@given(invariants(max_n=4, max_order=8))
def test_oracle_matches_closed_form(inv):
    m = vanishes_via_oracle(inv)
    v = euler_class_vanishes(inv)
    assert (m is not None) == v.vanishes
    if m is not None:
        n = normalize(inv)
        pres = presentation(n)
        assert is_multiple(euler_class_dfr(n), euler_class_extension(n), m, pres)
        assert check_witness(n, m)


def test_oracle_witness_is_canonical_when_unique():
    inv = SeifertInvariants(0, -2, ((1, 2),) * 3)
    assert vanishes_via_oracle(inv) == euler_class_vanishes(inv).witness_m == -1


def test_oracle_grid_matches_scalar():
    rng = random.Random(11)
    bv, gv = list(range(-6, 7)), [0, 1, 2]
    for _ in range(50):
        n = rng.randint(0, 5)
        orders = sorted(rng.randint(2, 12) for _ in range(n))
        nums = _numerator_choices(orders) if n else [()]
        nums = rng.sample(nums, min(len(nums), 4))
        A = np.array(nums, dtype=np.int64).reshape(len(nums), n)
        v, w = oracle_grid(orders, A, bv, gv)
        for k, row in enumerate(nums):
            for ib, b in enumerate(bv):
                for ig, g in enumerate(gv):
                    inv = SeifertInvariants(g, b, tuple(zip(row, orders)))
                    m = vanishes_via_oracle(inv)
                    assert bool(v[k, ib, ig]) == (m is not None)
                    if m is not None and n:
                        assert check_witness(inv, int(w[k, ib, ig]))
