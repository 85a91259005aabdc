"""Exact-integer search and verification toolkit for Heron triangles.

A Heron triangle has integer sides and integer area.  This package
enumerates them by brute force, finds the equable ones (area equals
perimeter) and the amicable pairs (each member's area equals the other's
perimeter), and mechanizes the finite divisor-bound argument showing that
exactly one amicable pair exists: (3, 25, 26) with (9, 12, 15).
"""

from .backends import available_backends, default_backend, resolve_backend
from .exact_arith import divisors, is_perfect_square, isqrt, perfect_square_root
from .oracle_search import (
    AmicablePair,
    enumerate_heron,
    enumerate_heron_by_sides,
    find_amicable,
    find_equable,
    find_perimeter_exceeds_area,
    partition_triples,
    partner_enumerate,
)
from .pipeline import (
    CandidateRecord,
    EliminationVerdict,
    TheoremReport,
    divisibility_filter,
    eliminate_candidate,
    equable_triangles,
    generate_candidates,
    skinny_filter,
    surviving_candidates,
    verify_theorem,
    xyz_product,
)
from .triangle_core import (
    HeronTriangle,
    OddPerimeterError,
    SideTriple,
    XyzTriple,
    area_squared,
    heron_area,
    is_equable,
    sides_to_xyz,
    xyz_to_sides,
)

__version__ = "0.1.0"

__all__ = [
    "AmicablePair",
    "CandidateRecord",
    "EliminationVerdict",
    "HeronTriangle",
    "OddPerimeterError",
    "SideTriple",
    "TheoremReport",
    "XyzTriple",
    "area_squared",
    "available_backends",
    "default_backend",
    "divisibility_filter",
    "divisors",
    "eliminate_candidate",
    "enumerate_heron",
    "enumerate_heron_by_sides",
    "equable_triangles",
    "find_amicable",
    "find_equable",
    "find_perimeter_exceeds_area",
    "generate_candidates",
    "heron_area",
    "is_equable",
    "is_perfect_square",
    "isqrt",
    "partition_triples",
    "partner_enumerate",
    "perfect_square_root",
    "resolve_backend",
    "sides_to_xyz",
    "skinny_filter",
    "surviving_candidates",
    "verify_theorem",
    "xyz_product",
    "xyz_to_sides",
]
