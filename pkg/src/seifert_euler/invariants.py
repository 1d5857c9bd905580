"""
Seifert invariants M(g; b, a1/b1, ..., an/bn) of a closed oriented Seifert
fibred manifold with orientable base, and the invariants derived directly
from them: Euler number, orbifold Euler characteristic, base geometry and
first homology.
"""
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd, prod

from .numbertheory import IntegerMatrix, smith_normal_form


class Geometry(Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"
    BAD_ORBIFOLD = "bad-orbifold"


@dataclass(frozen=True)
class SeifertInvariants:
    """
    Seifert invariants (genus; b, a1/b1, ..., an/bn).

    Pairs with denominator 1 are folded into b on construction and a
    negative denominator flips the sign of the pair, so every stored pair
    has b_i >= 2 and gcd(a_i, b_i) = 1.  The order of ``cone`` is kept as
    given; use ``normalize`` for the canonical form.
    """
    genus: int
    b: int
    cone: tuple = field(default=())

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        b = int(self.b)
        pairs = []
        for k, pair in enumerate(self.cone):
            a_i, b_i = (int(x) for x in pair)
            if b_i == 0:
                raise ValueError(f"cone[{k}]: denominator b_{k + 1} is 0")
            if b_i < 0:
                a_i, b_i = -a_i, -b_i
            if gcd(a_i, b_i) != 1:
                raise ValueError(
                    f"cone[{k}]: gcd(a_{k + 1}, b_{k + 1}) = gcd({a_i}, {b_i}) != 1")
            if b_i == 1:
                b += a_i
                continue
            pairs.append((a_i, b_i))
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "cone", tuple(pairs))

    @property
    def n(self):
        return len(self.cone)

    @property
    def cone_orders(self):
        return [b_i for _, b_i in self.cone]

    def is_normalized(self):
        return self == normalize(self)

    # interchange formats

    def to_dict(self):
        return {"genus": self.genus, "b": self.b, "cone": [list(p) for p in self.cone]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def compact(self):
        """Compact descriptor ``g;b;a1/b1,a2/b2,...``."""
        cone = ",".join(f"{a}/{b}" for a, b in self.cone)
        return f"{self.genus};{self.b};{cone}"

    def __str__(self):
        parts = [str(self.b)] + [f"{a}/{b}" for a, b in self.cone]
        return f"M({self.genus}; {', '.join(parts)})"


_INT = re.compile(r"^[+-]?\d+$")


def from_dict(data):
    """Build invariants from the JSON descriptor ``{"genus", "b", "cone"}``."""
    if not isinstance(data, dict):
        raise ValueError("descriptor must be a JSON object")
    for key in ("genus", "b"):
        if key not in data:
            raise ValueError(f"missing field '{key}'")
        if not isinstance(data[key], int) or isinstance(data[key], bool):
            raise ValueError(f"field '{key}' must be an integer")
    cone = data.get("cone", [])
    if not isinstance(cone, list):
        raise ValueError("field 'cone' must be a list of [a, b] pairs")
    pairs = []
    for k, p in enumerate(cone):
        if (not isinstance(p, (list, tuple)) or len(p) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
            raise ValueError(f"cone[{k}] must be a pair of integers")
        pairs.append(tuple(p))
    return SeifertInvariants(data["genus"], data["b"], tuple(pairs))


def parse_compact(text):
    """
    Parse ``g;b;a1/b1,...`` (third field empty when there are no cone
    points).  Raises ValueError naming the offending field.
    """
    fields = text.strip().split(";")
    if len(fields) == 2:
        fields.append("")
    if len(fields) != 3:
        raise ValueError("descriptor must have the form 'g;b;a1/b1,a2/b2,...'")
    g_s, b_s, cone_s = (f.strip() for f in fields)
    if not _INT.match(g_s):
        raise ValueError(f"genus: not an integer: {g_s!r}")
    if not _INT.match(b_s):
        raise ValueError(f"b: not an integer: {b_s!r}")
    pairs = []
    if cone_s:
        for k, item in enumerate(cone_s.split(",")):
            num, sep, den = item.strip().partition("/")
            if not sep or not _INT.match(num) or not _INT.match(den):
                raise ValueError(f"cone[{k}]: expected 'a/b', got {item.strip()!r}")
            pairs.append((int(num), int(den)))
    return SeifertInvariants(int(g_s), int(b_s), tuple(pairs))


def parse_descriptor(text):
    """Accept either the JSON descriptor or the compact form."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON descriptor: {exc.msg}") from None
        return from_dict(data)
    return parse_compact(text)


def normalize(inv):
    """
    Canonical representative: 0 < a_i < b_i, pairs sorted by (b_i, a_i),
    integer parts moved into b so that the Euler number is unchanged.
    """
    b = inv.b
    pairs = []
    for a_i, b_i in inv.cone:
        q, r = divmod(a_i, b_i)
        b += q
        pairs.append((r, b_i))
    pairs.sort(key=lambda p: (p[1], p[0]))
    return SeifertInvariants(inv.genus, b, tuple(pairs))


def orientation_reverse(inv):
    """The same fibred manifold with the opposite orientation, normalized."""
    return normalize(SeifertInvariants(
        inv.genus, -inv.b, tuple((-a, b_i) for a, b_i in inv.cone)))


def equivalent(x, y):
    """Orientation- and fibre-preserving equivalence of invariant tuples."""
    return normalize(x) == normalize(y)


def euler_number(inv):
    return inv.b + sum((Fraction(a, b_i) for a, b_i in inv.cone), Fraction(0))


def orbifold_euler_char(inv):
    return (2 - 2 * inv.genus - inv.n
            + sum((Fraction(1, b_i) for b_i in inv.cone_orders), Fraction(0)))


@dataclass(frozen=True)
class BaseOrbifold:
    genus: int
    cone_orders: tuple
    chi: Fraction

    def __post_init__(self):
        expected = 2 - 2 * self.genus - sum(1 - Fraction(1, k) for k in self.cone_orders)
        if self.chi != expected:
            raise ValueError(f"chi {self.chi} inconsistent with genus/cone orders")


def base_orbifold(inv):
    return BaseOrbifold(inv.genus, tuple(inv.cone_orders), orbifold_euler_char(inv))


def base_geometry(inv):
    orders = inv.cone_orders
    if inv.genus == 0 and (len(orders) == 1 or (len(orders) == 2 and orders[0] != orders[1])):
        return Geometry.BAD_ORBIFOLD
    chi = orbifold_euler_char(inv)
    if chi > 0:
        return Geometry.SPHERICAL
    if chi == 0:
        return Geometry.EUCLIDEAN
    return Geometry.HYPERBOLIC


@dataclass(frozen=True)
class HomologyGroup:
    """Z^rank plus torsion Z/d1 + ... with d1 | d2 | ..., each d_i >= 2."""
    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be >= 0")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficient {d} < 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError(f"torsion coefficients {d}, {e} break divisibility")

    @property
    def torsion_order(self):
        return prod(self.torsion)

    @property
    def order(self):
        """|H|, or None when the group is infinite."""
        return None if self.rank else self.torsion_order

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def relation_matrix(inv):
    """
    Abelianized relations of pi_1(M) over generators (x_1, ..., x_n, h):
    rows b_i x_i + a_i h and x_1 + ... + x_n - b h.  The surface generators
    contribute a free Z^{2g} and are left out.
    """
    n = inv.n
    rows = []
    for i, (a_i, b_i) in enumerate(inv.cone):
        row = [0] * (n + 1)
        row[i] = b_i
        row[n] = a_i
        rows.append(row)
    rows.append([1] * n + [-inv.b])
    return IntegerMatrix.from_rows(rows, n + 1)


def first_homology(inv):
    """H_1(M) via the Smith normal form of the abelianized presentation."""
    R = relation_matrix(inv)
    _, S, _ = smith_normal_form(R)
    diag = S.diagonal()
    free = R.cols - sum(1 for d in diag if d)
    torsion = tuple(d for d in diag if d > 1)
    return HomologyGroup(2 * inv.genus + free, torsion)


def torsion_order(inv):
    """
    |T_1(M)|: b_1...b_n |e(M)| when e(M) != 0, else the torsion order read off
    the Smith normal form.
    """
    e = euler_number(inv)
    if e:
        t = prod(inv.cone_orders) * abs(e)
        assert t.denominator == 1
        return t.numerator
    return first_homology(inv).torsion_order


def is_rational_homology_sphere(inv):
    # rank H_1 = 2g + (1 if e(M) == 0 else 0)
    return inv.genus == 0 and euler_number(inv) != 0
