"""Brute-force enumeration of Heron triangles and the searches built on it.

This module is the ground-truth oracle: it finds equable triangles,
perimeter-exceeds-area ("skinny") triangles, and amicable pairs by
exhaustive scan up to a perimeter bound, never by the divisor-based
candidate arguments in :mod:`amicable_heron.pipeline`.  Keeping the two
routes independent is what makes their agreement meaningful.

Results are exhaustive only up to the requested bound; unbounded
statements come from the pipeline, not from here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backends
from .triangle_core import HeronTriangle, SideTriple, XyzTriple

MIN_PERIMETER_BOUND = 3


@dataclass(frozen=True)
class AmicablePair:
    """Two distinct Heron triangles, each one's area equal to the other's perimeter.

    Canonical order: ``first`` has the smaller perimeter (ties broken by
    side lexicographic order), so a pair compares equal no matter which
    member was found first.
    """

    first: HeronTriangle
    second: HeronTriangle

    def __post_init__(self) -> None:
        if self.first.sides == self.second.sides:
            raise ValueError(f"amicable pair members must be distinct, got {self.first.sides.as_tuple()} twice")
        if self.first.area != self.second.perimeter or self.second.area != self.first.perimeter:
            raise ValueError(
                f"not amicable: areas {(self.first.area, self.second.area)} vs "
                f"perimeters {(self.first.perimeter, self.second.perimeter)}"
            )
        if (self.first.perimeter, self.first.sides) > (self.second.perimeter, self.second.sides):
            raise ValueError("pair not in canonical order; use AmicablePair.of")

    @classmethod
    def of(cls, h1: HeronTriangle, h2: HeronTriangle) -> "AmicablePair":
        """Build the canonically ordered pair from two triangles in any order."""
        if (h1.perimeter, h1.sides) > (h2.perimeter, h2.sides):
            h1, h2 = h2, h1
        return cls(first=h1, second=h2)

    def sort_key(self) -> tuple[int, ...]:
        return self.first.sort_key() + self.second.sort_key()


def _check_bound(p_max: int) -> None:
    if p_max < MIN_PERIMETER_BOUND:
        raise ValueError(f"perimeter bound must be >= {MIN_PERIMETER_BOUND}, got {p_max}")


def enumerate_heron(p_max: int, backend: str | None = None) -> list[HeronTriangle]:
    """Every Heron triangle with perimeter <= p_max, sorted by (perimeter, a, b, c).

    Scans (x, y, z) coordinates, which covers all even perimeters; the
    side-triple route (enumerate_heron_by_sides) independently confirms
    that odd perimeters never occur.
    """
    _check_bound(p_max)
    rows = backends.heron_xyz_rows(p_max, backend=backend)
    tris = []
    for s, x, y, z, area in rows.tolist():
        sides = SideTriple(x + y, x + z, y + z)
        tris.append(HeronTriangle(sides=sides, perimeter=2 * s, semiperimeter=s, area=area))
    tris.sort(key=HeronTriangle.sort_key)
    return tris


def enumerate_heron_by_sides(p_max: int, backend: str | None = None) -> list[HeronTriangle]:
    """Same census as enumerate_heron but via the raw side-triple scan."""
    _check_bound(p_max)
    rows = backends.heron_side_rows(p_max, backend=backend)
    tris = []
    for a, b, c, area in rows.tolist():
        p = a + b + c
        if p % 2 == 1:
            # Provably impossible (an odd perimeter makes 16*A^2 odd); if a
            # row ever claimed otherwise the constructor below must not
            # mask it.
            raise AssertionError(f"side scan produced odd-perimeter Heron triangle {(a, b, c)}")
        tris.append(HeronTriangle(sides=SideTriple(a, b, c), perimeter=p, semiperimeter=p // 2, area=area))
    tris.sort(key=HeronTriangle.sort_key)
    return tris


def find_equable(p_max: int, backend: str | None = None) -> list[HeronTriangle]:
    """All enumerated triangles with area == perimeter, canonically sorted."""
    return [h for h in enumerate_heron(p_max, backend=backend) if h.area == h.perimeter]


def find_perimeter_exceeds_area(p_max: int, backend: str | None = None) -> list[HeronTriangle]:
    """All enumerated triangles with perimeter strictly greater than area."""
    return [h for h in enumerate_heron(p_max, backend=backend) if h.perimeter > h.area]


def find_amicable(p_max: int, backend: str | None = None) -> list[AmicablePair]:
    """All amicable pairs among triangles with perimeter <= p_max.

    Indexes triangles by (perimeter, area), so each triangle is matched
    against exactly the triangles that could complete it and the scan
    stays linear in the census size.
    """
    tris = enumerate_heron(p_max, backend=backend)
    by_profile: dict[tuple[int, int], list[HeronTriangle]] = {}
    for h in tris:
        by_profile.setdefault((h.perimeter, h.area), []).append(h)
    pairs: set[AmicablePair] = set()
    for h in tris:
        for partner in by_profile.get((h.area, h.perimeter), ()):
            if partner.sides != h.sides:
                pairs.add(AmicablePair.of(h, partner))
    return sorted(pairs, key=AmicablePair.sort_key)


def partition_triples(s: int) -> list[XyzTriple]:
    """All x <= y <= z with x + y + z = s, in (x, y) scan order."""
    if s < 3:
        raise ValueError(f"semiperimeter must be >= 3, got {s}")
    out = []
    for x in range(1, s // 3 + 1):
        for y in range(x, (s - x) // 2 + 1):
            out.append(XyzTriple(x, y, s - x - y))
    return out


def partner_enumerate(s_target: int, area_target: int) -> list[XyzTriple]:
    """All (x, y, z) with x+y+z = s_target whose triangle has the given area.

    Exhaustive over every partition of s_target, with no pruning, so an
    empty result is a proof that no such triangle exists.  Pure Python
    integers throughout; exact at any size.
    """
    if area_target < 1:
        raise ValueError(f"area target must be >= 1, got {area_target}")
    want = area_target * area_target
    return [t for t in partition_triples(s_target) if s_target * t.x * t.y * t.z == want]
