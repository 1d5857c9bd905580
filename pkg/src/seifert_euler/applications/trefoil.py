"""
Dehn surgery on the right-handed trefoil.

The exterior is Seifert fibred over the disc with exceptional fibres of
orders 2 and 3, and the regular fibre on the boundary torus is h = 6*mu +
lambda.  Writing the filling slope p*mu + q*lambda in the basis (mu, h) gives
(p - 6q)*mu + q*h, so the filled manifold is

    M(0; -1, 1/2, 2/3, q/(p - 6q)),

whose Euler number is p / (6(p - 6q)).  The constant part (-1, 1/2, 2/3) is
the one sign choice for which |H_1| = |p| and the CTF criterion (p/q < 1)
both come out right; the opposite choice is the mirror image.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..eulerclass import euler_class_vanishes
from ..foliations import Answer, admits_horizontal_foliation
from ..invariants import Geometry, SeifertInvariants, base_geometry, normalize


@dataclass(frozen=True)
class SurgerySlope:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if q == 0:
            raise ValueError("q must be nonzero")
        if q < 0:
            p, q = -p, -q
        if gcd(p, q) != 1:
            raise ValueError(f"p and q must be coprime, got {p}/{q}")
        if p == 6 * q:
            raise ValueError("6/1 is the fibre slope")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def value(self):
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


def trefoil_surgery(slope):
    p, q = slope.p, slope.q
    return normalize(SeifertInvariants(0, -1, ((1, 2), (2, 3), (q, p - 6 * q))))


def trefoil_ctf(slope):
    """Whether p/q surgery carries a co-oriented taut foliation."""
    inv = trefoil_surgery(slope)
    verdict = admits_horizontal_foliation(inv)
    if verdict.answer is Answer.OUT_OF_SCOPE:
        # |p - 6q| = 1: a lens space, fibred over a bad orbifold
        assert base_geometry(inv) is Geometry.BAD_ORBIFOLD
        return False
    return verdict.exists


def trefoil_zero_euler_ctf(slope):
    """Whether p/q surgery carries a CTF whose Euler class vanishes."""
    return trefoil_ctf(slope) and euler_class_vanishes(trefoil_surgery(slope)).vanishes


def _congruent(x, y, modulus):
    modulus = abs(modulus)
    return x == y if modulus == 0 else (x - y) % modulus == 0


def predicted_ctf(slope):
    return slope.value < 1


def predicted_zero_euler_ctf(slope):
    """p/q < 1 and |q| = 1 (mod |p|); modulus 0 is read as equality."""
    return slope.value < 1 and _congruent(abs(slope.q), 1, slope.p)


def slope_grid(max_abs_p=40, max_q=12):
    for q in range(1, max_q + 1):
        for p in range(-max_abs_p, max_abs_p + 1):
            if gcd(p, q) == 1 and p != 6 * q:
                yield SurgerySlope(p, q)
