"""
Sweeps over the spherical and Euclidean families with three or four cone
points, checked against reference closed forms for chi(B), e(M) and
b_1...b_n e(M) = +-|H_1(M)|, and against reference sets of invariants
with vanishing Euler class.

Vanishing sets are compared up to the equivalence generated by the usual
moves and orientation reversal: a reference representative also accounts
for its mirror whenever the mirror lies in the same family.
"""
import csv
import difflib
import io
from dataclasses import dataclass, field
from fractions import Fraction as F
from importlib import resources
from math import gcd, prod

from ..eulerclass import euler_class_vanishes
from ..invariants import (
    SeifertInvariants, euler_number, first_homology, normalize, orbifold_euler_char,
    orientation_reverse,
)

B_RANGE = range(-6, 7)
B3_RANGE = range(3, 13)


def _coprime(n):
    return [a for a in range(1, n) if gcd(a, n) == 1]


@dataclass
class Family:
    """One reference row: a parametrized family and its closed forms."""
    label: str
    chi_text: str
    e_text: str
    h1_text: str
    vanishing_text: str
    members: object          # b_range -> iterable of (params, invariants)
    chi: object              # params -> Fraction
    e: object                # params -> Fraction
    h1: object               # params -> signed int
    vanishing: object        # params -> list of invariants (reference reps)


def _fixed(b_cone):
    def members(b_range):
        for b in b_range:
            yield {"b": b}, SeifertInvariants(0, b, b_cone)
    return members


def _free_last(prefix, b3_values):
    def members(b_range):
        for b3 in b3_values:
            for a in _coprime(b3):
                for b in b_range:
                    yield {"b": b, "a": a, "b3": b3}, SeifertInvariants(0, b, prefix + ((a, b3),))
    return members


HALF, THIRD = (1, 2), (1, 3)

SPHERICAL = [
    Family("(b, 1/2, 1/2, 1/2)", "1/2", "(2b+3)/2", "4(2b+3)",
           "(-1, 1/2, 1/2, 1/2) and (-2, 1/2, 1/2, 1/2)",
           _fixed((HALF,) * 3),
           lambda p: F(1, 2), lambda p: F(2 * p["b"] + 3, 2), lambda p: 4 * (2 * p["b"] + 3),
           lambda p: [SeifertInvariants(0, -1, (HALF,) * 3),
                      SeifertInvariants(0, -2, (HALF,) * 3)]),
    Family("(b, 1/2, 1/2, a/b3), b3 >= 3", "1/b3", "(b3(b+1)+a)/b3", "4(b3(b+1)+a)",
           "(-1, 1/2, 1/2, 1/b3)",
           _free_last((HALF, HALF), B3_RANGE),
           lambda p: F(1, p["b3"]), lambda p: F(p["b3"] * (p["b"] + 1) + p["a"], p["b3"]),
           lambda p: 4 * (p["b3"] * (p["b"] + 1) + p["a"]),
           lambda p: [SeifertInvariants(0, -1, (HALF, HALF, (1, p["b3"])))]),
    Family("(b, 1/2, 1/3, 1/3)", "1/6", "(6b+7)/6", "3(6b+7)",
           "(-1, 1/2, 1/3, 1/3)",
           _fixed((HALF, THIRD, THIRD)),
           lambda p: F(1, 6), lambda p: F(6 * p["b"] + 7, 6), lambda p: 3 * (6 * p["b"] + 7),
           lambda p: [SeifertInvariants(0, -1, (HALF, THIRD, THIRD))]),
    Family("(b, 1/2, 1/3, a/4)", "1/12", "(12b+10+3a)/12", "2(12b+10+3a)",
           "(-1, 1/2, 1/3, 1/4)",
           _free_last((HALF, THIRD), [4]),
           lambda p: F(1, 12), lambda p: F(12 * p["b"] + 10 + 3 * p["a"], 12),
           lambda p: 2 * (12 * p["b"] + 10 + 3 * p["a"]),
           lambda p: [SeifertInvariants(0, -1, (HALF, THIRD, (1, 4)))]),
    Family("(b, 1/2, 1/3, a/5)", "1/30", "(30b+6a+25)/30", "30b+6a+25",
           "(-1, 1/2, 1/3, 1/5)",
           _free_last((HALF, THIRD), [5]),
           lambda p: F(1, 30), lambda p: F(30 * p["b"] + 6 * p["a"] + 25, 30),
           lambda p: 30 * p["b"] + 6 * p["a"] + 25,
           lambda p: [SeifertInvariants(0, -1, (HALF, THIRD, (1, 5)))]),
]


def _euclidean(orders, shift, factor):
    cone = tuple((1, o) for o in orders)
    label = "(b, " + ", ".join(f"1/{o}" for o in orders) + ")"
    rep = "(" + ", ".join([str(-shift)] + [f"1/{o}" for o in orders]) + ")"
    return Family(label, "0", f"b+{shift}", f"{factor}(b+{shift})", rep,
                  _fixed(cone),
                  lambda p: F(0), lambda p: F(p["b"] + shift),
                  lambda p: factor * (p["b"] + shift),
                  lambda p: [SeifertInvariants(0, -shift, cone)])


EUCLIDEAN = [
    _euclidean((2, 3, 6), 1, 36),
    _euclidean((2, 4, 4), 1, 32),
    _euclidean((3, 3, 3), 1, 27),
    _euclidean((2, 2, 2, 2), 2, 16),
]


@dataclass
class TableRow:
    family: Family
    columns: dict
    vanishing_tuples: list = field(default_factory=list)
    expected_tuples: list = field(default_factory=list)
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems


def _orientation_class(inv):
    x = normalize(inv)
    y = orientation_reverse(inv)
    return min((x.b, x.cone), (y.b, y.cone))


def _fmt(inv):
    return "(" + ", ".join([str(inv.b)] + [f"{a}/{b}" for a, b in inv.cone]) + ")"


def evaluate_family(fam, b_range=B_RANGE):
    problems = []
    vanishing, expected = [], []
    for params, inv in fam.members(b_range):
        inv = normalize(inv)
        chi, e = orbifold_euler_char(inv), euler_number(inv)
        signed = prod(inv.cone_orders) * e
        if chi != fam.chi(params):
            problems.append(f"chi at {params}: {chi}")
        if e != fam.e(params):
            problems.append(f"e(M) at {params}: {e}")
        if signed != fam.h1(params):
            problems.append(f"b1..bn e(M) at {params}: {signed}")
        h1 = first_homology(inv)
        order = h1.order if h1.order is not None else 0
        if order != abs(fam.h1(params)):
            problems.append(f"|H1| at {params}: {h1}")
        if euler_class_vanishes(inv).vanishes:
            vanishing.append(inv)
        reps = {_orientation_class(r) for r in fam.vanishing(params)}
        if _orientation_class(inv) in reps:
            expected.append(inv)
    if vanishing != expected:
        extra = [_fmt(x) for x in vanishing if x not in expected]
        missing = [_fmt(x) for x in expected if x not in vanishing]
        problems.append(f"vanishing set differs: extra {extra}, missing {missing}")
    columns = {
        "invariants": fam.label,
        "chi": fam.chi_text,
        "e": fam.e_text,
        "h1": fam.h1_text,
        "vanishing": fam.vanishing_text,
    }
    if problems:
        columns = dict(columns, vanishing="MISMATCH: " + "; ".join(problems[:3]))
    return TableRow(fam, columns, vanishing, expected, problems)


def spherical_table(b_range=B_RANGE):
    return [evaluate_family(f, b_range) for f in SPHERICAL]


def euclidean_table(b_range=B_RANGE):
    return [evaluate_family(f, b_range) for f in EUCLIDEAN]


SPHERICAL_HEADER = ("Seifert invariants", "chi(B)", "e(M)", "+-|H1(M)|",
                    "Seifert invariants when e(nu_M) = 0")
EUCLIDEAN_HEADER = ("Seifert invariants", "e(M)", "+-|H1(M)|",
                    "Seifert invariants when e(nu_M) = 0")


def _cells(row, with_chi):
    c = row.columns
    cells = [c["invariants"]] + ([c["chi"]] if with_chi else []) + [c["e"], c["h1"], c["vanishing"]]
    return cells


def render_text(rows, with_chi):
    header = SPHERICAL_HEADER if with_chi else EUCLIDEAN_HEADER
    lines = [" | ".join(header)]
    lines += [" | ".join(_cells(r, with_chi)) for r in rows]
    return "\n".join(lines) + "\n"


def render_csv(rows, with_chi):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SPHERICAL_HEADER if with_chi else EUCLIDEAN_HEADER)
    for r in rows:
        w.writerow(_cells(r, with_chi))
    return buf.getvalue()


def golden_text(name):
    return resources.files(__package__).joinpath("golden", f"{name}.txt").read_text()


def diff_against(name, text, golden=None):
    """Unified diff of ``text`` against the golden copy (empty when equal)."""
    if golden is None:
        golden = golden_text(name)
    return "".join(difflib.unified_diff(
        golden.splitlines(keepends=True), text.splitlines(keepends=True),
        fromfile=f"golden/{name}.txt", tofile=f"computed/{name}.txt"))
