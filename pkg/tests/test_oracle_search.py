"""Brute-force search results, frozen from independent derivation runs."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amicable_heron.oracle_search import (
    AmicablePair,
    enumerate_heron,
    enumerate_heron_by_sides,
    find_amicable,
    find_equable,
    find_perimeter_exceeds_area,
    partition_triples,
    partner_enumerate,
)
from amicable_heron.triangle_core import HeronTriangle, SideTriple, XyzTriple, sides_to_xyz


def sides_of(tris):
    return [h.sides.as_tuple() for h in tris]


def test_enumerate_below_smallest_is_empty():
    assert enumerate_heron(11) == []
    assert enumerate_heron(3) == []


def test_enumerate_small_census():
    tris = enumerate_heron(16)
    assert sides_of(tris) == [(3, 4, 5), (5, 5, 6)]
    assert [(h.perimeter, h.area) for h in tris] == [(12, 6), (16, 12)]


def test_enumerate_includes_3_25_26():
    tris = enumerate_heron(54)
    assert (3, 25, 26) in sides_of(tris)
    h = next(t for t in tris if t.sides.as_tuple() == (3, 25, 26))
    assert (h.perimeter, h.area) == (54, 36)


def test_enumerate_sorted_and_bounded():
    tris = enumerate_heron(120)
    keys = [h.sort_key() for h in tris]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert all(h.perimeter <= 120 for h in tris)


@pytest.mark.parametrize("p_max,count", [(500, 1265), (1000, 3946), (2000, 11861)])
def test_census_sizes(p_max, count):
    assert len(enumerate_heron(p_max)) == count


def test_side_scan_route_agrees_with_xyz_route():
    assert enumerate_heron_by_sides(200) == enumerate_heron(200)


def test_bound_validation():
    with pytest.raises(ValueError):
        enumerate_heron(2)
    with pytest.raises(ValueError):
        find_equable(0)


def test_equable_census_up_to_200():
    tris = find_equable(200)
    assert sides_of(tris) == [(6, 8, 10), (5, 12, 13), (9, 10, 17), (7, 15, 20), (6, 25, 29)]
    assert all(h.area == h.perimeter for h in tris)


def test_equable_short_bounds():
    assert find_equable(20) == []
    assert sides_of(find_equable(24)) == [(6, 8, 10)]


def test_perimeter_exceeds_area_up_to_20():
    assert sides_of(find_perimeter_exceeds_area(20)) == [(3, 4, 5), (5, 5, 6), (5, 5, 8)]


def test_perimeter_exceeds_area_includes_4_13_15():
    tris = find_perimeter_exceeds_area(32)
    h = next(t for t in tris if t.sides.as_tuple() == (4, 13, 15))
    assert (h.perimeter, h.area) == (32, 24)
    # profile matters downstream: this one fails the divisibility condition
    assert (2 * 32 * 32) % 24 != 0


def test_perimeter_exceeds_area_includes_long_skinny():
    tris = find_perimeter_exceeds_area(1734)
    h = next(t for t in tris if t.sides.as_tuple() == (3, 865, 866))
    assert (h.perimeter, h.area) == (1734, 1224)


def test_filters_cohere_with_enumeration():
    tris = enumerate_heron(300)
    assert find_equable(300) == [h for h in tris if h.area == h.perimeter]
    assert find_perimeter_exceeds_area(300) == [h for h in tris if h.perimeter > h.area]


def test_amicable_unique_pair():
    pairs = find_amicable(200)
    assert len(pairs) == 1
    pair = pairs[0]
    assert pair.first.sides.as_tuple() == (9, 12, 15)
    assert pair.second.sides.as_tuple() == (3, 25, 26)
    assert pair.first.area == pair.second.perimeter == 54
    assert pair.second.area == pair.first.perimeter == 36


def test_amicable_empty_below_54():
    assert find_amicable(30) == []
    assert find_amicable(53) == []


def test_amicable_still_unique_at_2000():
    pairs = find_amicable(2000)
    assert [(p.first.sides.as_tuple(), p.second.sides.as_tuple()) for p in pairs] == [
        ((9, 12, 15), (3, 25, 26))
    ]


def test_amicable_pair_canonical_order():
    h1 = HeronTriangle.from_sides(SideTriple(3, 25, 26))
    h2 = HeronTriangle.from_sides(SideTriple(9, 12, 15))
    assert AmicablePair.of(h1, h2) == AmicablePair.of(h2, h1)
    assert AmicablePair.of(h1, h2).first == h2  # smaller perimeter first
    with pytest.raises(ValueError):
        AmicablePair(first=h1, second=h2)  # wrong order rejected


def test_amicable_pair_validates_cross_equalities():
    h1 = HeronTriangle.from_sides(SideTriple(3, 4, 5))
    h2 = HeronTriangle.from_sides(SideTriple(9, 12, 15))
    with pytest.raises(ValueError):
        AmicablePair.of(h1, h2)


def test_amicable_pair_requires_distinct_sides():
    h = HeronTriangle.from_sides(SideTriple(5, 12, 13))  # equable: pairs with itself
    with pytest.raises(ValueError):
        AmicablePair.of(h, h)


def test_partition_triples_of_6():
    assert [t.as_tuple() for t in partition_triples(6)] == [(1, 1, 4), (1, 2, 3), (2, 2, 2)]


def test_partition_triples_of_3():
    assert [t.as_tuple() for t in partition_triples(3)] == [(1, 1, 1)]


@given(st.integers(3, 60))
@settings(max_examples=40)
def test_partition_triples_exhaustive(s):
    triples = partition_triples(s)
    assert all(t.semiperimeter == s for t in triples)
    assert len(set(triples)) == len(triples)
    # cross-check the count against a direct filter of the full cube
    expected = sum(
        1
        for x in range(1, s + 1)
        for y in range(x, s + 1)
        if s - x - y >= y
    )
    assert len(triples) == expected


def test_partner_enumerate_examples():
    assert partner_enumerate(6, 18) == []
    assert partner_enumerate(3, 6) == []
    assert [t.as_tuple() for t in partner_enumerate(18, 54)] == [(3, 6, 9)]


def test_partner_enumerate_validates():
    with pytest.raises(ValueError):
        partner_enumerate(2, 5)
    with pytest.raises(ValueError):
        partner_enumerate(6, 0)


@given(st.integers(3, 40))
@settings(max_examples=25)
def test_partner_enumerate_agrees_with_oracle(s):
    """Partner search must match filtering the census by (p, A) = (2s, A)."""
    by_area: dict[int, list[XyzTriple]] = {}
    for h in enumerate_heron(2 * s):
        if h.perimeter == 2 * s:
            by_area.setdefault(h.area, []).append(sides_to_xyz(h.sides))
    for area, expect in by_area.items():
        assert sorted(partner_enumerate(s, area)) == sorted(expect)
    # and an area no triangle attains comes back empty
    unused = max(by_area, default=1) + 1
    assert partner_enumerate(s, unused) == []
