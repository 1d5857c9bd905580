"""
Enumeration of normalized Seifert invariants within bounds, with every
derived quantity attached, plus CSV / JSON-lines serialization.
"""
import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, groupby, product
from math import gcd
from typing import Optional

import numpy as np

from ..cohomology import oracle_grid
from ..eulerclass import euler_class_vanishes, vanishing_grid
from ..foliations import Answer, FoliationVerdict, admits_horizontal_foliation
from ..invariants import (
    Geometry, HomologyGroup, SeifertInvariants, base_geometry, euler_number,
    first_homology, is_rational_homology_sphere, orbifold_euler_char,
)

COLUMNS = ("descriptor", "geometry", "e", "chi", "h1_rank", "h1_torsion",
           "enu_vanishes", "witness_m", "ctf", "certificate")


@dataclass(frozen=True)
class CensusBounds:
    max_n: int
    max_cone_order: int
    b_min: int
    b_max: int
    genus_min: int = 0
    genus_max: int = 0

    def __post_init__(self):
        if self.max_n < 0:
            raise ValueError("max_n must be >= 0")
        if self.max_cone_order < 0:
            raise ValueError("max_cone_order must be >= 0")
        if self.genus_min < 0 or self.genus_max < 0:
            raise ValueError("genus bounds must be >= 0")

    @property
    def b_values(self):
        return range(self.b_min, self.b_max + 1)

    @property
    def genus_values(self):
        return range(self.genus_min, self.genus_max + 1)


def cone_pairs(max_cone_order):
    """All (a, b) with 2 <= b <= max_cone_order, 0 < a < b, gcd 1, by (b, a)."""
    return [(a, b) for b in range(2, max_cone_order + 1)
            for a in range(1, b) if gcd(a, b) == 1]


def cone_tuples(max_n, max_cone_order):
    """Sorted multisets of cone pairs, shortest first, then lexicographic."""
    pairs = cone_pairs(max_cone_order)
    for n in range(max_n + 1):
        yield from combinations_with_replacement(pairs, n)


def enumerate_invariants(bounds):
    if bounds.b_min > bounds.b_max:
        return
    for g in bounds.genus_values:
        for cone in cone_tuples(bounds.max_n, bounds.max_cone_order):
            for b in bounds.b_values:
                yield SeifertInvariants(g, b, cone)


def count_normalized(bounds):
    """Closed-form number of tuples ``enumerate_invariants`` yields."""
    if bounds.b_min > bounds.b_max or bounds.genus_min > bounds.genus_max:
        return 0
    from math import comb
    k = len(cone_pairs(bounds.max_cone_order))
    # multisets of size n drawn from k pairs; only the empty one when k = 0
    tuples = sum(comb(k + n - 1, n) if k else int(n == 0) for n in range(bounds.max_n + 1))
    return tuples * len(bounds.b_values) * len(bounds.genus_values)


@dataclass(frozen=True)
class CensusRecord:
    invariants: SeifertInvariants
    geometry: Geometry
    euler_number: Fraction
    chi: Fraction
    h1: HomologyGroup
    enu_vanishes: bool
    witness_m: Optional[int]
    ctf: FoliationVerdict

    @classmethod
    def build(cls, inv):
        verdict = euler_class_vanishes(inv)
        return cls(inv, base_geometry(inv), euler_number(inv), orbifold_euler_char(inv),
                   first_homology(inv), verdict.vanishes, verdict.witness_m,
                   admits_horizontal_foliation(inv))

    @property
    def is_rhs(self):
        return self.h1.rank == 0

    def row(self):
        cert = self.ctf.certificate
        return {
            "descriptor": self.invariants.compact(),
            "geometry": self.geometry.value,
            "e": str(self.euler_number),
            "chi": str(self.chi),
            "h1_rank": self.h1.rank,
            "h1_torsion": " ".join(str(d) for d in self.h1.torsion),
            "enu_vanishes": self.enu_vanishes,
            "witness_m": self.witness_m,
            "ctf": self.ctf.answer.value,
            "certificate": json.dumps(cert.to_dict(), separators=(",", ":")) if cert else "",
        }


def enumerate_census(bounds, record_filter=None):
    for inv in enumerate_invariants(bounds):
        rec = CensusRecord.build(inv)
        if record_filter is None or record_filter(rec):
            yield rec


def ctf_without_zero_euler(rec):
    """Rational homology spheres with a CTF but nonzero Euler class."""
    return rec.is_rhs and rec.ctf.answer is Answer.YES and not rec.enu_vanishes


FILTERS = {"ctf-no-zero-euler": ctf_without_zero_euler}


def write_csv(records, stream):
    writer = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        row = rec.row()
        row["enu_vanishes"] = str(row["enu_vanishes"]).lower()
        row["witness_m"] = "" if row["witness_m"] is None else row["witness_m"]
        writer.writerow(row)


def write_jsonl(records, stream):
    for rec in records:
        stream.write(json.dumps(rec.row(), separators=(",", ":")) + "\n")


def render(records, fmt="csv"):
    buf = io.StringIO()
    (write_csv if fmt == "csv" else write_jsonl)(records, buf)
    return buf.getvalue()


# Bulk closed-form vs oracle comparison

def _numerator_choices(orders):
    """All normalized numerator rows for a sorted tuple of cone orders."""
    blocks = []
    for o, grp in groupby(orders):
        k = len(list(grp))
        residues = [a for a in range(1, o) if gcd(a, o) == 1]
        blocks.append(list(combinations_with_replacement(residues, k)))
    return [sum(choice, ()) for choice in product(*blocks)]


@dataclass
class OracleSweepResult:
    instances: int = 0
    vanishing: int = 0
    disagreements: list = None
    witness_mismatches: list = None

    def __post_init__(self):
        self.disagreements = self.disagreements or []
        self.witness_mismatches = self.witness_mismatches or []

    @property
    def ok(self):
        return not self.disagreements and not self.witness_mismatches


def oracle_sweep(bounds, limit_examples=20):
    """
    Compare the closed-form decision with the H^2 membership oracle on every
    normalized tuple within ``bounds``.  Tuples are grouped by their cone
    orders and each group is evaluated as one array computation.
    """
    result = OracleSweepResult()
    if bounds.b_min > bounds.b_max or bounds.genus_min > bounds.genus_max:
        return result
    bv = list(bounds.b_values)
    gv = list(bounds.genus_values)
    for n in range(bounds.max_n + 1):
        for orders in combinations_with_replacement(range(2, bounds.max_cone_order + 1), n):
            nums = _numerator_choices(orders) if n else [()]
            A = np.array(nums, dtype=np.int64).reshape(len(nums), n)
            v, wv = vanishing_grid(orders, A, bv, gv)
            o, wo = oracle_grid(orders, A, bv, gv)
            result.instances += v.size
            result.vanishing += int(v.sum())
            for k, ib, ig in np.argwhere(v != o):
                if len(result.disagreements) < limit_examples:
                    result.disagreements.append(
                        (int(gv[ig]), int(bv[ib]), tuple(zip(A[k].tolist(), orders))))
            # witnesses are unique when e(M) != 0, i.e. b*L + sum a_i*(L/b_i) != 0
            L = int(np.lcm.reduce(orders)) if n else 1
            weights = np.array([L // o for o in orders], dtype=np.int64)
            e_num = np.array(bv)[None, :] * L + (A * weights).sum(axis=1)[:, None]
            unique = np.broadcast_to((e_num != 0)[:, :, None], v.shape)
            bad = v & o & unique & (wv != wo)
            for k, ib, ig in np.argwhere(bad):
                if len(result.witness_mismatches) < limit_examples:
                    result.witness_mismatches.append(
                        (int(gv[ig]), int(bv[ib]), tuple(zip(A[k].tolist(), orders))))
    return result
