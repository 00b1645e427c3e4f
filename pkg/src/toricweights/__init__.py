"""Exact enumeration of regular triangulations of a lattice polytope and of
the Chow and Hurwitz weight polytopes built from their characteristic vectors.

All arithmetic is exact (Python ints and fractions); the identities relating
characteristic vectors, integrals and the Donaldson functional hold as strict
equalities and double as the test oracles.
"""

from .exact import Rational, det, lattice_index
from .functionals import (
    Degrees,
    PLFunction,
    aubin_l,
    degrees,
    donaldson_f,
    integral_boundary,
    integral_q,
    pairing,
    pl_from_lifting,
)
from .lp import EQ, LE, LT, Constraint, LinearSystem, constraint, feasible_strict
from .pipeline import Analysis, analyze
from .polytope import (
    DelzantReport,
    Facet,
    LatticePolytope,
    PointConfiguration,
    boundary_volume,
    facets_from_vertices,
    is_delzant,
    is_massive,
    lattice_points,
    normalized_volume,
    volume,
)
from .triangulation import (
    Enumeration,
    EnumerationCapExceeded,
    EnumerationCaps,
    Flip,
    Lifting,
    RegularityCertificate,
    Subdivision,
    Triangulation,
    cone_system,
    enumerate_regular,
    flips,
    is_regular,
    lower_hull_subdivision,
    placing_triangulation,
)
from .vectors import CharVector, boundary_vector, gkz_vector, hurwitz_vector
from .weights import (
    CHOW,
    HURWITZ,
    WeightPolytope,
    build,
    run_support_trials,
    support_min,
    verify_chow_support,
    verify_hurwitz_support,
    verify_identities,
)

__all__ = [name for name in dir() if not name.startswith("_")]
