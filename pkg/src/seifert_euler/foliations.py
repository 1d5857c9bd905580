"""
Existence of horizontal foliations on M(0; b, a_1/b_1, ..., a_n/b_n) with
0 < a_i < b_i.

Hyperbolic base: a horizontal foliation exists iff
  (1) 2 - n <= b <= -2, or
  (2) b = -1 and some coprime 0 < c < d and distinct indices i, j give
      a_i/b_i < c/d, a_j/b_j < (d - c)/d and a_k/b_k < 1/d for all other k, or
  (3) b = 1 - n and (2) holds for the complementary fractions (b_i - a_i)/b_i.

Euclidean base: we answer Yes exactly when e(M) = 0.  The "if" direction
comes from the torus fibration over the circle; the "only if" direction is
the classical Eisenbud-Hirsch-Neumann result and is taken on trust here.
Spherical base: never (finite fundamental group).  Positive genus and bad
orbifolds are outside what this module decides.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional

from .invariants import Geometry, base_geometry, euler_number


class Answer(Enum):
    YES = "yes"
    NO = "no"
    OUT_OF_SCOPE = "out-of-scope"


@dataclass(frozen=True)
class Certificate:
    condition: int
    c: Optional[int] = None
    d: Optional[int] = None
    i: Optional[int] = None
    j: Optional[int] = None

    def to_dict(self):
        out = {"condition": self.condition}
        if self.d is not None:
            out.update(c=self.c, d=self.d, assignment=[self.i, self.j])
        return out


@dataclass(frozen=True)
class FoliationVerdict:
    answer: Answer
    certificate: Optional[Certificate] = None
    note: str = ""

    @property
    def exists(self):
        return self.answer is Answer.YES

    def to_dict(self):
        return {"answer": self.answer.value,
                "certificate": self.certificate.to_dict() if self.certificate else None,
                "note": self.note}


def _below(f, num, den):
    """f < num/den for a Fraction f and den > 0, by cross-multiplication."""
    return f.numerator * den < num * f.denominator


def eligible_pairs(fractions):
    """
    Yield every (c, d, i, j) with gcd(c, d) = 1, 0 < c < d, i != j, such that
    fractions[i] < c/d, fractions[j] < (d-c)/d and fractions[k] < 1/d for
    every other k.

    Requires at least three fractions, all strictly between 0 and 1.  The
    third condition bounds d: d * f_k < 1 for each remaining k.
    """
    fr = [Fraction(f) for f in fractions]
    n = len(fr)
    if n < 3:
        raise ValueError("need at least three fractions")
    if any(not 0 < f < 1 for f in fr):
        raise ValueError("fractions must lie strictly between 0 and 1")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            rest = [fr[k] for k in range(n) if k != i and k != j]
            # largest d with d * f < 1 for all remaining f
            d_max = min((f.denominator - 1) // f.numerator for f in rest)
            for d in range(2, d_max + 1):
                # c > d * f_i and d - c > d * f_j
                c_lo = d * fr[i].numerator // fr[i].denominator + 1
                for c in range(c_lo, d):
                    if not _below(fr[j], d - c, d):
                        break
                    if gcd(c, d) == 1:
                        yield c, d, i, j


def check_certificate(fractions, cert):
    """Re-validate a condition (2)/(3) certificate by direct comparison."""
    fr = [Fraction(f) for f in fractions]
    c, d, i, j = cert.c, cert.d, cert.i, cert.j
    if not (0 < c < d and gcd(c, d) == 1 and i != j):
        return False
    for k, f in enumerate(fr):
        bound = c if k == i else d - c if k == j else 1
        if not _below(f, bound, d):
            return False
    return True


def condition_fractions(inv, condition):
    if condition == 2:
        return [Fraction(a, b_i) for a, b_i in inv.cone]
    return [Fraction(b_i - a, b_i) for a, b_i in inv.cone]


def admits_horizontal_foliation(inv):
    if any(not 0 < a < b_i for a, b_i in inv.cone):
        raise ValueError("invariants must be normalized with 0 < a_i < b_i")
    geom = base_geometry(inv)
    if inv.genus != 0 or geom is Geometry.BAD_ORBIFOLD:
        return FoliationVerdict(Answer.OUT_OF_SCOPE,
                                note="only genus-0 bases with a good orbifold are decided")
    if geom is Geometry.SPHERICAL:
        return FoliationVerdict(Answer.NO, note="spherical base: finite fundamental group")
    if geom is Geometry.EUCLIDEAN:
        if euler_number(inv) == 0:
            return FoliationVerdict(Answer.YES, note="euclidean base, e(M) = 0")
        return FoliationVerdict(Answer.NO, note="euclidean base, e(M) != 0")

    n, b = inv.n, inv.b
    if 2 - n <= b <= -2:
        return FoliationVerdict(Answer.YES, Certificate(1))
    for condition, target in ((2, -1), (3, 1 - n)):
        if b != target:
            continue
        hit = next(eligible_pairs(condition_fractions(inv, condition)), None)
        if hit is not None:
            c, d, i, j = hit
            return FoliationVerdict(Answer.YES, Certificate(condition, c, d, i, j))
    return FoliationVerdict(Answer.NO)
