"""Vanishing of the Euler class of the normal bundle of a Seifert fibration."""
from .invariants import (
    Geometry, HomologyGroup, SeifertInvariants, base_geometry, equivalent,
    euler_number, first_homology, is_rational_homology_sphere, normalize,
    orbifold_euler_char, orientation_reverse, parse_descriptor, torsion_order,
)
from .eulerclass import VanishingVerdict, euler_class_vanishes
from .cohomology import vanishes_via_oracle
from .foliations import Answer, FoliationVerdict, admits_horizontal_foliation

__version__ = "0.1.0"
