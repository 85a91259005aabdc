import functools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amicable_heron import pipeline
from amicable_heron.exact_arith import divisors, is_perfect_square
from amicable_heron.oracle_search import find_equable, partner_enumerate
from amicable_heron.pipeline import (
    METHOD_ENUMERATION,
    METHOD_PARITY_SHORTCUT,
    STATUS_DISCREPANCY,
    STATUS_VERIFIED,
    divisibility_filter,
    eliminate_candidate,
    equable_triangles,
    generate_candidates,
    skinny_filter,
    surviving_candidates,
    verify_theorem,
    xyz_product,
)
from amicable_heron.triangle_core import XyzTriple, sides_to_xyz

SURVIVOR_XYZ = [(1, 2, 3), (1, 2, 24), (1, 2, 864), (1, 4, 4)]
SURVIVOR_SIDES = [(3, 4, 5), (3, 25, 26), (3, 865, 866), (5, 5, 8)]


@pytest.mark.parametrize(
    "p,area,expected",
    [
        (54, 36, True),  # 2*54^2 = 36 * 162
        (32, 24, False),  # 2048 / 24 is not an integer
        (1734, 1224, True),  # 2*1734^2 = 1224 * 4913
        (12, 6, True),
    ],
)
def test_divisibility_filter(p, area, expected):
    assert divisibility_filter(p, area) is expected


def test_divisibility_filter_validates():
    with pytest.raises(ValueError):
        divisibility_filter(0, 5)


@pytest.mark.parametrize(
    "p,area,expected",
    [
        (1224, 1734, 4913),
        (12, 6, 6),  # (3,4,5): x*y*z = 1*2*3
        (36, 54, 162),  # (9,12,15): x*y*z = 3*6*9
    ],
)
def test_xyz_product(p, area, expected):
    assert xyz_product(p, area) == expected


def test_xyz_product_requires_divisibility():
    with pytest.raises(ValueError):
        xyz_product(7, 5)


@pytest.mark.parametrize(
    "xyz,expected",
    [
        ((1, 2, 24), True),  # 108 > 48
        ((1, 4, 4), True),  # 36 > 16
        ((4, 4, 4), False),  # 48 < 64
        ((2, 4, 6), False),  # equable: 48 = 48, strict inequality excludes it
    ],
)
def test_skinny_filter(xyz, expected):
    assert skinny_filter(XyzTriple(*xyz)) is expected


@given(st.integers(4, 60), st.integers(0, 60), st.integers(0, 60))
def test_skinny_impossible_once_x_reaches_4(x, dy, dz):
    """4(x+y+z) <= 12z < 16z <= x*y*z whenever 4 <= x <= y <= z."""
    y = x + dy
    z = y + dz
    assert not skinny_filter(XyzTriple(x, y, z))


def test_equable_triangles_census():
    tris = equable_triangles()
    assert [h.sides.as_tuple() for h in tris] == [
        (6, 8, 10), (5, 12, 13), (9, 10, 17), (7, 15, 20), (6, 25, 29)
    ]
    perims = [h.perimeter for h in tris]
    assert perims == [24, 30, 36, 42, 60]
    assert all(h.area == h.perimeter for h in tris)


def test_equable_triangles_match_bounded_oracle():
    assert equable_triangles() == find_equable(1000)


def test_no_equable_triangle_is_skinny():
    for h in equable_triangles():
        assert not skinny_filter(sides_to_xyz(h.sides))


class TestGenerateCandidates:
    def test_survivors(self):
        records = generate_candidates()
        assert len(records) == 673
        survivors = surviving_candidates(records)
        assert [c.xyz.as_tuple() for c in survivors] == SURVIVOR_XYZ
        assert [c.sides.as_tuple() for c in survivors] == SURVIVOR_SIDES

    def test_records_sorted_and_within_bounds(self):
        records = generate_candidates()
        keys = [c.xyz.as_tuple() for c in records]
        assert keys == sorted(keys)
        for c in records:
            x, y, z = c.xyz.as_tuple()
            assert 1 <= x <= 3 and x <= y <= 9 and z >= y
            assert (64 * (x + y) ** 3) % z == 0

    def test_record_fields_consistent(self):
        for c in generate_candidates():
            x, y, z = c.xyz.as_tuple()
            assert c.xy_sum == x + y
            assert c.perimeter == 2 * (x + y + z)
            assert c.area_sq == (x + y + z) * x * y * z
            if c.area is not None:
                assert c.area * c.area == c.area_sq
                assert c.passed_divisibility == divisibility_filter(c.perimeter, c.area)
            else:
                assert c.passed_divisibility is None

    def test_divisor_soundness_for_survivors(self):
        for c in surviving_candidates():
            x, y, z = c.xyz.as_tuple()
            assert (64 * (x + y) ** 3) % z == 0
            assert (64 * (x + y + z) ** 3) % z == 0

    def test_subcase_x1_y4(self):
        """General bound generates 26 triples here; only z=4 has a square area."""
        sub = [c for c in generate_candidates() if c.xyz.x == 1 and c.xyz.y == 4]
        assert len(sub) == 26
        assert [c.xyz.z for c in sub if c.passed_square_area] == [4]

    def test_subcase_x1_y4_sharpened_divisor_set(self):
        """Tracking the extra factor 4z sharpens the bound to z | 2^4 * 5^3."""
        sharpened = [d for d in divisors(2**4 * 5**3) if d >= 4]
        assert len(sharpened) == 18
        square = [z for z in sharpened if is_perfect_square((5 + z) * 4 * z)]
        assert square == [4]
        # the sharpened set is a subset of what the general bound generates
        general = {c.xyz.z for c in generate_candidates() if c.xyz.x == 1 and c.xyz.y == 4}
        assert set(sharpened) <= general

    def test_subcase_x3_y9_all_fail_skinny(self):
        sub = [c for c in generate_candidates() if c.xyz.x == 3 and c.xyz.y == 9]
        assert len(sub) == 46
        assert not any(c.passed_skinny for c in sub)


@pytest.fixture(scope="module")
def verdicts():
    return {c.sides.as_tuple(): eliminate_candidate(c) for c in surviving_candidates()}


class TestEliminateCandidate:
    def test_5_5_8_eliminated_by_enumeration(self, verdicts):
        v = verdicts[(5, 5, 8)]
        assert (v.required_perimeter, v.required_area) == (12, 18)
        assert v.method == METHOD_ENUMERATION
        assert v.eliminated
        assert len(partner_enumerate(6, 18)) == 0

    def test_3_4_5_eliminated_by_enumeration(self, verdicts):
        v = verdicts[(3, 4, 5)]
        assert (v.required_perimeter, v.required_area) == (6, 12)
        assert v.method == METHOD_ENUMERATION
        assert v.eliminated

    def test_3_865_866_eliminated_by_parity(self, verdicts):
        v = verdicts[(3, 865, 866)]
        assert (v.required_perimeter, v.required_area) == (1224, 1734)
        assert v.method == METHOD_PARITY_SHORTCUT
        assert v.eliminated
        # the shortcut's premises
        assert xyz_product(1224, 1734) == 4913
        assert xyz_product(1224, 1734) % 2 == 1
        assert (1224 // 2) % 2 == 0

    def test_parity_shortcut_agrees_with_exhaustive_enumeration(self, verdicts):
        """Redundant check: the skipped enumeration really would find nothing."""
        assert verdicts[(3, 865, 866)].method == METHOD_PARITY_SHORTCUT
        assert partner_enumerate(612, 1734) == []

    def test_3_25_26_finds_partner(self, verdicts):
        v = verdicts[(3, 25, 26)]
        assert (v.required_perimeter, v.required_area) == (36, 54)
        assert v.method == METHOD_ENUMERATION
        assert [t.as_tuple() for t in v.partners] == [(3, 6, 9)]

    def test_rejects_non_survivors(self):
        loser = next(c for c in generate_candidates() if not c.survives)
        with pytest.raises(ValueError):
            eliminate_candidate(loser)


class TestVerifyTheorem:
    def test_verified_report(self):
        report = verify_theorem()
        assert report.status == STATUS_VERIFIED
        assert report.verified
        assert report.discrepancy is None
        assert report.survivor_count == 4
        assert len(report.equable_triangles) == 5
        pair = report.conclusion
        assert pair.first.sides.as_tuple() == (9, 12, 15)
        assert pair.second.sides.as_tuple() == (3, 25, 26)
        assert pair.first.area == pair.second.perimeter
        assert pair.second.area == pair.first.perimeter
        assert report.scope_note  # bounded-oracle caveat must be stated

    def test_every_candidate_appears_in_report(self):
        report = verify_theorem()
        assert len(report.candidates) == 673
        assert sum(1 for v in report.verdicts if not v.eliminated) == 1

    def test_agreement_with_bounded_oracle(self):
        from amicable_heron.oracle_search import find_amicable

        report = verify_theorem()
        for bound in (54, 200):
            pairs = find_amicable(bound)
            assert len(pairs) == 1
            assert pairs[0] == report.conclusion


class TestMutations:
    """Corrupting any single filter must change the survivor set or flip the verdict."""

    def test_non_strict_skinny_inflates_survivors(self):
        mutated = surviving_candidates(generate_candidates(strict_skinny=False))
        assert len(mutated) != 4
        # the equable triples sneak in exactly on the boundary
        assert XyzTriple(2, 4, 6) in [c.xyz for c in mutated]

    def test_dropping_z_floor_inflates_survivors(self):
        mutated = surviving_candidates(generate_candidates(z_at_least_y=False))
        assert len(mutated) != 4
        # (1, 2, 3) reappears through the unsorted slots (1, 3, 2) and (2, 3, 1)
        assert [c.xyz.as_tuple() for c in mutated].count((1, 2, 3)) == 3

    @pytest.mark.parametrize("mutation", [{"strict_skinny": False}, {"z_at_least_y": False}])
    def test_verify_theorem_flags_mutations(self, monkeypatch, mutation):
        monkeypatch.setattr(
            pipeline, "generate_candidates", functools.partial(generate_candidates, **mutation)
        )
        report = pipeline.verify_theorem()
        assert report.status == STATUS_DISCREPANCY
        assert "candidate-generation" in report.discrepancy
        assert report.conclusion is None
