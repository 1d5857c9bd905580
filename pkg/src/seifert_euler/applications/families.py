"""
Checks of four infinite families of hyperbolic-base Seifert manifolds whose
horizontal-foliation and Euler-class behaviour is known in closed form:

1. M(0; b, 1/c, ..., 1/c), n >= 4:
   (a) horizontal foliation iff 2-n <= b <= -2, or b = -1 and c >= 3;
   (b) if c >= 2n-2, e(nu) = 0 iff b = 2-n; and c = 2n-3, b = -1 vanishes.
2. M(0; 2-n, a_1/b_1, ...), n >= 3, sum a_i/b_i <= (n-2)/2:
   horizontal foliation, and e(nu) = 0 iff every a_i = 1.
3. M(0; b, 1/b_1, ..., 1/b_n), n >= 4, b_i >= n pairwise coprime:
   (a) horizontal foliation iff 2-n <= b <= -1; (b) e(nu) = 0 iff b = 2-n.
4. M(0; b, a_1/b_1, ...), n >= 4, sum a_i/b_i <= n/6:
   (a) horizontal foliation for 2-n <= b <= -2, and for b = -1 if n <= 6;
   (b) e(nu) = 0 for at most one b with 2-n <= b <= (2-n)/2.

Families with a sum constraint are covered by an exhaustive box of small
cone orders plus seeded random tuples with cone orders up to ``max_order``.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from ..eulerclass import euler_class_vanishes
from ..foliations import admits_horizontal_foliation
from ..invariants import SeifertInvariants
from .census import cone_pairs

# exhaustive boxes (n -> largest cone order) for the sum-constrained families
FAMILY2_BOX = {3: 12, 4: 10, 5: 8, 6: 6}
FAMILY4_BOX = {4: 12, 5: 10, 6: 8}


@dataclass
class FamilyReport:
    family: int
    instances: int = 0
    checks: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def check(self, inv, claim, expected, actual):
        self.checks += 1
        if expected != actual:
            self.mismatches.append({"descriptor": inv.compact(), "claim": claim,
                                    "expected": expected, "actual": actual})

    def to_dict(self):
        return {"family": self.family, "instances": self.instances,
                "checks": self.checks, "ok": self.ok, "mismatches": self.mismatches}


def _ctf(inv):
    return admits_horizontal_foliation(inv).exists


def _vanishes(inv):
    return euler_class_vanishes(inv).vanishes


def bounded_sum_tuples(n, max_order, bound):
    """Normalized cone tuples of length n, orders <= max_order, sum a_i/b_i <= bound."""
    pairs = sorted(cone_pairs(max_order), key=lambda p: (Fraction(*p), p))
    fr = [Fraction(*p) for p in pairs]

    def rec(start, left, total, acc):
        if left == 0:
            yield tuple(sorted(acc, key=lambda p: (p[1], p[0])))
            return
        for k in range(start, len(pairs)):
            if total + fr[k] * left > bound:
                break
            yield from rec(k, left - 1, total + fr[k], acc + [pairs[k]])

    yield from rec(0, n, Fraction(0), [])


def random_bounded_tuples(n, max_order, bound, samples, rng, max_tries=200_000):
    """Up to ``samples`` random normalized tuples satisfying the sum bound."""
    out = set()
    tries = 0
    while len(out) < samples and tries < max_tries:
        tries += 1
        cone = []
        for _ in range(n):
            b_i = rng.randint(2, max_order)
            top = max(1, int(b_i * 2 * bound / n))
            choices = [a for a in range(1, min(top, b_i - 1) + 1) if gcd(a, b_i) == 1]
            cone.append((rng.choice(choices), b_i))
        if sum(Fraction(a, b_i) for a, b_i in cone) <= bound:
            out.add(tuple(sorted(cone, key=lambda p: (p[1], p[0]))))
    return sorted(out)


def pairwise_coprime_sets(n, lo, hi):
    values = range(lo, hi + 1)
    for combo in combinations(values, n):
        if all(gcd(x, y) == 1 for x, y in combinations(combo, 2)):
            yield combo


def _family1(report, n_values=(4, 5, 6), c_values=range(2, 13), b_pad=3):
    for n in n_values:
        for c in c_values:
            cone = ((1, c),) * n
            for b in range(-n - b_pad, b_pad + 1):
                inv = SeifertInvariants(0, b, cone)
                report.instances += 1
                report.check(inv, "1(a) horizontal foliation",
                             2 - n <= b <= -2 or (b == -1 and c >= 3), _ctf(inv))
                if c >= 2 * n - 2:
                    report.check(inv, "1(b) vanishing iff b = 2-n", b == 2 - n, _vanishes(inv))
                if c == 2 * n - 3 and b == -1:
                    report.check(inv, "1(b) boundary c = 2n-3, b = -1", True, _vanishes(inv))


def _family2_cones(n_values, max_order, samples, seed):
    rng = random.Random(seed)
    for n in n_values:
        bound = Fraction(n - 2, 2)
        seen = set(bounded_sum_tuples(n, min(FAMILY2_BOX.get(n, 6), max_order), bound))
        seen.update(random_bounded_tuples(n, max_order, bound, samples, rng))
        for cone in sorted(seen):
            yield n, cone


def _family2(report, n_values=(3, 4, 5, 6), max_order=30, samples=300, seed=0):
    for n, cone in _family2_cones(n_values, max_order, samples, seed):
        inv = SeifertInvariants(0, 2 - n, cone)
        report.instances += 1
        report.check(inv, "2 horizontal foliation", True, _ctf(inv))
        report.check(inv, "2 vanishing iff all a_i = 1",
                     all(a == 1 for a, _ in cone), _vanishes(inv))


def _family3(report, n_values=(4, 5, 6), max_order=30, b_pad=3):
    for n in n_values:
        for orders in pairwise_coprime_sets(n, n, max_order):
            cone = tuple((1, o) for o in orders)
            for b in range(-n - b_pad, b_pad + 1):
                inv = SeifertInvariants(0, b, cone)
                report.instances += 1
                report.check(inv, "3(a) horizontal foliation iff 2-n <= b <= -1",
                             2 - n <= b <= -1, _ctf(inv))
                report.check(inv, "3(b) vanishing iff b = 2-n", b == 2 - n, _vanishes(inv))


def _family4(report, n_values=(4, 5, 6), max_order=30, samples=300, seed=0):
    rng = random.Random(seed)
    for n in n_values:
        bound = Fraction(n, 6)
        cones = set(bounded_sum_tuples(n, min(FAMILY4_BOX.get(n, 6), max_order), bound))
        cones.update(random_bounded_tuples(n, max_order, bound, samples, rng))
        for cone in sorted(cones):
            report.instances += 1
            for b in range(2 - n, 0):
                if b == -1 and n > 6:
                    continue
                inv = SeifertInvariants(0, b, cone)
                report.check(inv, "4(a) horizontal foliation", True, _ctf(inv))
            hits = [b for b in range(2 - n, (2 - n) // 2 + 1)
                    if 2 * b <= 2 - n and _vanishes(SeifertInvariants(0, b, cone))]
            report.check(SeifertInvariants(0, 2 - n, cone),
                         "4(b) at most one vanishing b", True, len(hits) <= 1)


_RUNNERS = {1: _family1, 2: _family2, 3: _family3, 4: _family4}


def example_family_check(family, params=None):
    """Evaluate the stated claims for one family; ``params`` overrides the ranges."""
    if family not in _RUNNERS:
        raise ValueError(f"family must be one of 1, 2, 3, 4, got {family!r}")
    report = FamilyReport(family)
    _RUNNERS[family](report, **(params or {}))
    return report
