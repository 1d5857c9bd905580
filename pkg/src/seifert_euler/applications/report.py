"""Dictionaries describing one manifold or one trefoil surgery, ready for JSON."""
from ..cohomology import vanishes_via_oracle
from ..eulerclass import euler_class_vanishes
from ..foliations import admits_horizontal_foliation
from ..invariants import (
    base_geometry, euler_number, first_homology, normalize, orbifold_euler_char,
)
from .trefoil import (
    predicted_ctf, predicted_zero_euler_ctf, trefoil_ctf, trefoil_surgery,
    trefoil_zero_euler_ctf,
)


def analysis_report(inv, descriptor=None):
    norm = normalize(inv)
    verdict = euler_class_vanishes(norm)
    oracle_m = vanishes_via_oracle(norm)
    h1 = first_homology(norm)
    foliation = admits_horizontal_foliation(norm).to_dict()
    return {
        "input": descriptor if descriptor is not None else inv.compact(),
        "normalized": norm.compact(),
        "geometry": base_geometry(norm).value,
        "euler_number": str(euler_number(norm)),
        "chi": str(orbifold_euler_char(norm)),
        "h1": {"rank": h1.rank, "torsion": list(h1.torsion), "order": h1.order,
               "text": str(h1)},
        "euler_class": verdict.to_dict(),
        "foliation": foliation,
        "oracle": {"vanishes": oracle_m is not None, "witness_m": oracle_m},
        "agree": verdict.vanishes == (oracle_m is not None),
    }


def trefoil_report(slope):
    inv = trefoil_surgery(slope)
    ctf, zero = trefoil_ctf(slope), trefoil_zero_euler_ctf(slope)
    pred_ctf, pred_zero = predicted_ctf(slope), predicted_zero_euler_ctf(slope)
    return {
        "slope": str(slope),
        "manifold": inv.compact(),
        "ctf": ctf,
        "zero_euler": zero,
        "predicted_ctf": pred_ctf,
        "predicted_zero_euler": pred_zero,
        "agrees": ctf == pred_ctf and zero == pred_zero,
    }
