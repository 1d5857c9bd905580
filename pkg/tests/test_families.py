from fractions import Fraction

import pytest

from seifert_euler import SeifertInvariants, admits_horizontal_foliation, euler_class_vanishes
from seifert_euler.applications.families import (
    bounded_sum_tuples, example_family_check, pairwise_coprime_sets,
)


@pytest.mark.parametrize("family", [1, 2, 4])
def test_family_claims_hold(family):
    report = example_family_check(family)
    assert report.ok, report.mismatches[:5]
    assert report.checks > 0


def test_family3_small():
    report = example_family_check(3, {"n_values": (4, 5), "max_order": 20})
    assert report.ok and report.instances > 0


def test_family1_examples():
    for b in range(-6, 3):
        inv = SeifertInvariants(0, b, ((1, 6),) * 4)
        assert euler_class_vanishes(inv).vanishes == (b == -2)
    assert euler_class_vanishes(SeifertInvariants(0, -1, ((1, 5),) * 4)).vanishes


def test_family4_example():
    inv = SeifertInvariants(0, -1, ((1, 6),) * 5)
    assert admits_horizontal_foliation(inv).exists


def test_bounded_sum_tuples():
    tuples = list(bounded_sum_tuples(3, 6, Fraction(1, 2)))
    assert ((1, 6), (1, 6), (1, 6)) in tuples
    assert all(sum(Fraction(a, b) for a, b in t) <= Fraction(1, 2) for t in tuples)
    assert len(set(tuples)) == len(tuples)


def test_pairwise_coprime_sets():
    sets = list(pairwise_coprime_sets(3, 3, 8))
    assert (3, 4, 5) in sets and (3, 4, 6) not in sets


def test_unknown_family():
    with pytest.raises(ValueError):
        example_family_check(5)


def test_report_records_mismatch():
    report = example_family_check(1, {"n_values": (4,), "c_values": (6,)})
    report.check(SeifertInvariants(0, 0), "demo", True, False)
    assert not report.ok and report.to_dict()["mismatches"][0]["claim"] == "demo"
