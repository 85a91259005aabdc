"""The finite search that pins down every possible amicable Heron triangle pair.

Write a triangle's coordinates as (x, y, z) = (s-a, s-b, s-c).  Three facts
cut the search space from infinite to a few hundred triples:

1.  divisibility: for every Heron triangle, x*y*z = 2*A^2/p is an integer.
    Applied to the partner of a triangle in an amicable pair (which swaps
    p and A), this forces A | 2*p^2 for the triangle itself.
2.  skinny inequality: equable triangles (A = p) all have distinct
    perimeters, so they never pair up; any remaining pair has a member
    with p > A, equivalently 4*(x+y+z) > x*y*z.
3.  finiteness: under 1 and 2, x <= 3 (else the product is at least
    16z > 12z >= 4(x+y+z)), y <= 9 (else z <= 6 < y), and z divides
    64*(x+y)^3 (expand 64*(x+y+z)^3/z and drop the integer terms).

``generate_candidates`` materializes every triple fact 3 allows and records
each filter's verdict per triple, so the survivor set is auditable record
by record.  ``eliminate_candidate`` then settles each survivor's partner
obligation, and ``verify_theorem`` composes the stages into one report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import divisors, perfect_square_root
from .oracle_search import AmicablePair, partner_enumerate
from .triangle_core import HeronTriangle, SideTriple, XyzTriple, area_squared, xyz_to_sides

METHOD_ENUMERATION = "enumeration"
METHOD_PARITY_SHORTCUT = "parity-shortcut"

STATUS_VERIFIED = "verified"
STATUS_DISCREPANCY = "discrepancy"

EXPECTED_EQUABLE_COUNT = 5
EXPECTED_SURVIVOR_COUNT = 4

SCOPE_NOTE = (
    "The candidate generation and partner eliminations above are finite "
    "computations with no perimeter cap, so the conclusion is unbounded; "
    "brute-force enumeration corroborates it only up to the perimeter "
    "bound it was run with."
)


def divisibility_filter(p: int, area: int) -> bool:
    """True iff area divides 2*p^2.

    Necessary for membership in an amicable pair: the partner triangle has
    perimeter `area` and area `p`, and its x*y*z = 2*p^2/area must be an
    integer.
    """
    if p < 1 or area < 1:
        raise ValueError(f"perimeter and area must be positive, got {(p, area)}")
    return (2 * p * p) % area == 0


def xyz_product(p: int, area: int) -> int:
    """The value x*y*z = 2*area^2/p shared by every triangle with this p and area.

    Raises ValueError when p does not divide 2*area^2 (no Heron triangle
    has such a perimeter/area profile).
    """
    doubled = 2 * area * area
    if p < 1 or doubled % p != 0:
        raise ValueError(f"2*{area}^2 is not divisible by perimeter {p}")
    return doubled // p


def skinny_filter(t: XyzTriple) -> bool:
    """True iff 4*(x+y+z) > x*y*z, i.e. perimeter > area for integer-area triples.

    Strict on purpose: equable triangles sit exactly on 4*(x+y+z) = x*y*z
    and are handled separately.
    """
    return 4 * t.semiperimeter > t.x * t.y * t.z


@dataclass(frozen=True)
class CandidateRecord:
    """One generated triple with the outcome of every filter.

    ``passed_divisibility`` is None when the triple has no integer area
    (the divisibility condition is only defined for Heron triangles).
    """

    xyz: XyzTriple
    xy_sum: int
    sides: SideTriple
    perimeter: int
    area_sq: int
    area: int | None
    passed_skinny: bool
    passed_square_area: bool
    passed_divisibility: bool | None

    @property
    def survives(self) -> bool:
        return self.passed_skinny and self.passed_square_area and bool(self.passed_divisibility)


@dataclass(frozen=True)
class EliminationVerdict:
    """Outcome of settling one surviving candidate's partner obligation.

    The partner, if it existed, would need perimeter equal to the
    candidate's area and area equal to the candidate's perimeter.  Method
    ``parity-shortcut`` means no enumeration was necessary: either the
    required perimeter is odd, or x*y*z of the partner would be odd (all
    of x, y, z odd, hence odd semiperimeter) while the required
    semiperimeter is even.
    """

    candidate: CandidateRecord
    required_perimeter: int
    required_area: int
    method: str
    partners: tuple[XyzTriple, ...]

    @property
    def eliminated(self) -> bool:
        return not self.partners


@dataclass(frozen=True)
class TheoremReport:
    """Full audit trail of the uniqueness verification.

    status is ``verified`` only when every stage came out exactly as the
    finite argument requires: five equable triangles with distinct
    perimeters, four surviving candidates, and exactly one of them with
    exactly one partner.  Any other outcome carries the failing stage and
    detail in ``discrepancy``.
    """

    equable_triangles: tuple[HeronTriangle, ...]
    candidates: tuple[CandidateRecord, ...]
    verdicts: tuple[EliminationVerdict, ...]
    conclusion: AmicablePair | None
    status: str
    discrepancy: str | None = None
    scope_note: str = SCOPE_NOTE

    @property
    def survivor_count(self) -> int:
        return sum(1 for c in self.candidates if c.survives)

    @property
    def verified(self) -> bool:
        return self.status == STATUS_VERIFIED


def equable_triangles() -> list[HeronTriangle]:
    """All Heron triangles whose area equals their perimeter.

    Equability means s*x*y*z = (2s)^2, i.e. x*y*z = 4*(x+y+z).  The same
    size bounds as in the candidate generator give x <= 3 and y <= 9, and
    then z*(x*y - 4) = 4*(x + y) pins z completely, so this enumeration is
    exhaustive with no perimeter bound.  The area is automatically the
    integer 2s, so every hit is a Heron triangle.
    """
    found = []
    for x in range(1, 4):
        for y in range(x, 10):
            den = x * y - 4
            if den <= 0:
                continue
            num = 4 * (x + y)
            if num % den != 0:
                continue
            z = num // den
            if z < y:
                continue
            tri = HeronTriangle.from_xyz(XyzTriple(x, y, z))
            assert tri is not None and tri.area == tri.perimeter
            found.append(tri)
    found.sort(key=HeronTriangle.sort_key)
    return found


def generate_candidates(*, strict_skinny: bool = True, z_at_least_y: bool = True) -> list[CandidateRecord]:
    """Materialize every triple the finiteness bounds allow, with filter verdicts.

    Iterates x in 1..3, y in x..9, and z over the divisors of 64*(x+y)^3
    with z >= y; every record carries each filter's outcome, whether or
    not an earlier filter already failed.  The keyword flags weaken one
    constraint at a time; they exist for fault-injection tests and default
    to the real argument.
    """
    records = []
    for x in range(1, 4):
        for y in range(x, 10):
            for z in divisors(64 * (x + y) ** 3):
                if z_at_least_y and z < y:
                    continue
                triple = XyzTriple(x, y, z)
                prod = triple.x * triple.y * triple.z
                if strict_skinny:
                    skinny = 4 * triple.semiperimeter > prod
                else:
                    skinny = 4 * triple.semiperimeter >= prod
                asq = area_squared(triple)
                root = perfect_square_root(asq)
                p = 2 * triple.semiperimeter
                records.append(
                    CandidateRecord(
                        xyz=triple,
                        xy_sum=triple.x + triple.y,
                        sides=xyz_to_sides(triple),
                        perimeter=p,
                        area_sq=asq,
                        area=root,
                        passed_skinny=skinny,
                        passed_square_area=root is not None,
                        passed_divisibility=divisibility_filter(p, root) if root is not None else None,
                    )
                )
    return records


def surviving_candidates(records: list[CandidateRecord] | None = None) -> list[CandidateRecord]:
    """The records that pass all three filters."""
    if records is None:
        records = generate_candidates()
    return [c for c in records if c.survives]


def eliminate_candidate(c: CandidateRecord) -> EliminationVerdict:
    """Settle one surviving candidate's partner obligation.

    Tries the parity shortcut first; when it does not apply, runs the
    exhaustive partner enumeration.  A verdict with no partners is a
    proof of elimination; partners, when present, complete a pair.
    """
    if not c.survives or c.area is None:
        raise ValueError(f"only surviving candidates carry a partner obligation, got {c.xyz.as_tuple()}")
    required_p = c.area
    required_area = c.perimeter

    if required_p % 2 == 1:
        # No triangle with an odd perimeter has an integer area, so the
        # partner cannot exist; nothing to enumerate.
        return EliminationVerdict(c, required_p, required_area, METHOD_PARITY_SHORTCUT, ())

    s_partner = required_p // 2
    doubled = 2 * required_area * required_area
    if doubled % required_p == 0:
        partner_product = doubled // required_p
        if partner_product % 2 == 1 and s_partner % 2 == 0:
            # x*y*z odd forces x, y, z all odd, hence an odd semiperimeter,
            # contradicting the even s the partner would need.
            return EliminationVerdict(c, required_p, required_area, METHOD_PARITY_SHORTCUT, ())

    partners = tuple(partner_enumerate(s_partner, required_area))
    return EliminationVerdict(c, required_p, required_area, METHOD_ENUMERATION, partners)


def _failure(
    stage: str,
    detail: str,
    equables: list[HeronTriangle],
    candidates: list[CandidateRecord],
    verdicts: tuple[EliminationVerdict, ...],
) -> TheoremReport:
    return TheoremReport(
        equable_triangles=tuple(equables),
        candidates=tuple(candidates),
        verdicts=verdicts,
        conclusion=None,
        status=STATUS_DISCREPANCY,
        discrepancy=f"{stage}: {detail}",
    )


def verify_theorem() -> TheoremReport:
    """Run the complete finite argument and report every intermediate record.

    Stages: (1) equable census - area-equals-perimeter triangles must have
    pairwise distinct perimeters, so none of them pair up; (2) candidate
    generation - exactly four triples survive all filters; (3) partner
    elimination - exactly one survivor has a partner, and exactly one.
    Any deviation produces a discrepancy report naming the stage and the
    offending records; nothing passes silently.
    """
    equables = equable_triangles()
    candidates = generate_candidates()

    if len(equables) != EXPECTED_EQUABLE_COUNT:
        return _failure(
            "equable-census",
            f"expected {EXPECTED_EQUABLE_COUNT} equable triangles, found "
            f"{[h.sides.as_tuple() for h in equables]}",
            equables, candidates, (),
        )
    perims = [h.perimeter for h in equables]
    if len(set(perims)) != len(perims):
        return _failure(
            "equable-census",
            f"equable perimeters {perims} are not pairwise distinct; equable pairing possible",
            equables, candidates, (),
        )

    survivors = [c for c in candidates if c.survives]
    if len(survivors) != EXPECTED_SURVIVOR_COUNT:
        return _failure(
            "candidate-generation",
            f"expected {EXPECTED_SURVIVOR_COUNT} surviving candidates, found "
            f"{[c.xyz.as_tuple() for c in survivors]}",
            equables, candidates, (),
        )

    verdicts = tuple(eliminate_candidate(c) for c in survivors)
    confirmed = [v for v in verdicts if not v.eliminated]
    if len(confirmed) != 1:
        return _failure(
            "partner-elimination",
            f"expected exactly one candidate with a partner, found "
            f"{[v.candidate.xyz.as_tuple() for v in confirmed]}",
            equables, candidates, verdicts,
        )
    winner = confirmed[0]
    if len(winner.partners) != 1:
        return _failure(
            "partner-elimination",
            f"candidate {winner.candidate.xyz.as_tuple()} has partners "
            f"{[t.as_tuple() for t in winner.partners]}, expected exactly one",
            equables, candidates, verdicts,
        )

    candidate_tri = HeronTriangle.from_xyz(winner.candidate.xyz)
    partner_tri = HeronTriangle.from_xyz(winner.partners[0])
    if candidate_tri is None or partner_tri is None:
        return _failure(
            "conclusion",
            f"confirmed records do not rebuild as Heron triangles: "
            f"{winner.candidate.xyz.as_tuple()}, {winner.partners[0].as_tuple()}",
            equables, candidates, verdicts,
        )
    try:
        pair = AmicablePair.of(candidate_tri, partner_tri)
    except ValueError as exc:
        return _failure("conclusion", str(exc), equables, candidates, verdicts)

    return TheoremReport(
        equable_triangles=tuple(equables),
        candidates=tuple(candidates),
        verdicts=verdicts,
        conclusion=pair,
        status=STATUS_VERIFIED,
    )
