import random

import numpy as np
import pytest
from hypothesis import given

from conftest import brute_force_witness, invariants, raw_invariants
from seifert_euler import SeifertInvariants, euler_class_vanishes, orientation_reverse
from seifert_euler.eulerclass import (
    Reason, check_witness, congruence_solution, gcd_necessary_condition, necessary_condition,
    torsion_divisibility_check, vanishing_grid,
)
from seifert_euler.applications.census import _numerator_choices

H, T = (1, 2), (1, 3)


@pytest.mark.parametrize("inv, vanishes, m", [
    (SeifertInvariants(0, -1, (H, H, H)), True, 1),
    (SeifertInvariants(0, -2, (H, H, H)), True, -1),
    (SeifertInvariants(0, -1, (H, T, (2, 5))), False, None),
    (SeifertInvariants(0, 0, (H, H, H)), False, None),
    (SeifertInvariants(1, 0), True, 0),
    (SeifertInvariants(0, 3), False, None),
    (SeifertInvariants(0, 2), True, 1),
    (SeifertInvariants(0, -1, (H, T, (1, 6))), True, 1),
    (SeifertInvariants(0, -1, (H, T, (1, 5))), True, 1),
])
def test_known_cases(inv, vanishes, m):
    v = euler_class_vanishes(inv)
    assert v.vanishes is vanishes and v.witness_m == m


@given(invariants(max_n=4, max_order=7, b_range=5))
def test_matches_brute_force_scan(inv):
    v = euler_class_vanishes(inv)
    brute = brute_force_witness(inv)
    assert v.vanishes == (brute is not None)
    if v.vanishes:
        assert check_witness(inv, v.witness_m)


@given(raw_invariants())
def test_unnormalized_input_accepted(inv):
    v = euler_class_vanishes(inv)
    if v.vanishes:
        assert check_witness(inv, v.witness_m)


@given(invariants())
def test_vanishing_is_orientation_invariant(inv):
    assert euler_class_vanishes(inv).vanishes == euler_class_vanishes(orientation_reverse(inv)).vanishes


@given(invariants())
def test_vanishing_implies_necessary_conditions(inv):
    if euler_class_vanishes(inv).vanishes:
        assert necessary_condition(inv)
        assert gcd_necessary_condition(inv)


def test_necessary_condition_examples():
    assert necessary_condition(SeifertInvariants(1, 0))
    assert necessary_condition(SeifertInvariants(0, -1, (H, T, (1, 6))))
    assert not necessary_condition(SeifertInvariants(0, 1, (H, T, (1, 7))))


def test_gcd_condition_examples():
    assert gcd_necessary_condition(SeifertInvariants(0, -1, (H, T, (1, 5))))
    assert not gcd_necessary_condition(SeifertInvariants(0, -1, ((1, 3), (2, 3), (1, 2))))


def test_torsion_divisibility():
    assert torsion_divisibility_check(SeifertInvariants(0, -1, (H, T, (1, 5))))
    assert torsion_divisibility_check(SeifertInvariants(0, -2, (H, H, H)))
    assert not torsion_divisibility_check(SeifertInvariants(0, 1, (H, T, (1, 7))))
    with pytest.raises(ValueError):
        torsion_divisibility_check(SeifertInvariants(0, -1, (H, T, (1, 6))))


@pytest.mark.parametrize("b", range(-6, 7))
def test_lens_space_rule(b):
    assert euler_class_vanishes(SeifertInvariants(0, b)).vanishes == (b in (-2, -1, 1, 2))


def test_reasons():
    assert euler_class_vanishes(SeifertInvariants(0, -1, (H, H))).reason is Reason.EULER_NUMBER_ZERO_CHI_NONZERO
    assert euler_class_vanishes(SeifertInvariants(0, -1, (H, T, (1, 6)))).reason is Reason.CHI_ZERO_EULER_ZERO
    assert euler_class_vanishes(SeifertInvariants(0, -1, ((1, 4), (3, 4), H))).reason is Reason.CONGRUENCE_INCONSISTENT
    assert congruence_solution(SeifertInvariants(0, 0, (H, (2, 3)))) == (5, 6)


def test_vanishing_grid_matches_scalar():
    rng = random.Random(7)
    bv, gv = list(range(-6, 7)), [0, 1, 2]
    for _ in range(60):
        n = rng.randint(0, 5)
        orders = sorted(rng.randint(2, 12) for _ in range(n))
        nums = _numerator_choices(orders) if n else [()]
        nums = rng.sample(nums, min(len(nums), 5))
        A = np.array(nums, dtype=np.int64).reshape(len(nums), n)
        v, w = vanishing_grid(orders, A, bv, gv)
        for k, row in enumerate(nums):
            for ib, b in enumerate(bv):
                for ig, g in enumerate(gv):
                    inv = SeifertInvariants(g, b, tuple(zip(row, orders)))
                    s = euler_class_vanishes(inv)
                    assert bool(v[k, ib, ig]) == s.vanishes
                    if s.vanishes and n:
                        assert check_witness(inv, int(w[k, ib, ig]))
