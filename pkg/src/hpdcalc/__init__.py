"""Exact calculus for homological projective duality on projective spaces.

Sheaf cohomology tables (Bott), topological Euler characteristics of complete
intersections, Grothendieck-group mutations, Ext on universal hyperplanes and
rank-level certificates for the HPD decompositions.
"""

from .bott import GradedDims, kunneth, line_cohomology, omega_cohomology
from .chern import AmbientSpec, CISpec, blowup_chi, chi_top
from .divisor_ext import (
    Bidegree,
    DivisorGeometry,
    ExtAnswer,
    canonical_twist,
    ext_on_divisor,
    fiber_vanishing,
    lemma_vanishing_table,
)
from .hpd_engine import (
    LefschetzData,
    SODReport,
    build_lefschetz,
    example_catalog,
    generation_schedule,
    hpd1_decomposition,
    hpd2_decomposition,
    mutation_walkthrough,
    orlov_checks,
    validate_lefschetz,
)
from .kgroup import (
    Collection,
    KClass,
    euler_pairing,
    gram_matrix,
    is_exceptional_collection,
    left_mutate,
    right_mutate,
)

__version__ = "0.1.0"
