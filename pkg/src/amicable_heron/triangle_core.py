"""Triangle domain types and the two coordinate systems used throughout.

A triangle is identified with its sorted integer side multiset (a, b, c).
When the perimeter is even, the substitution

    x = s - a,  y = s - b,  z = s - c      (s = semiperimeter)

gives a second coordinate system: positive integers x <= y <= z that map
back to sides (x+y, x+z, y+z).  Triples built that way automatically
satisfy the strict triangle inequality, and the square of the area is
simply s*x*y*z, so integer-area checks reduce to perfect-square tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import perfect_square_root


class OddPerimeterError(ValueError):
    """Raised when a conversion needs an integer semiperimeter but a+b+c is odd."""


def _check_positive_ints(name: str, values: tuple[int, ...]) -> None:
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"{name} components must be ints, got {v!r}")
        if v <= 0:
            raise ValueError(f"{name} components must be positive, got {values}")


@dataclass(frozen=True, order=True)
class SideTriple:
    """Sorted side lengths of a nondegenerate integer triangle.

    The constructor sorts its arguments, so congruent triangles compare
    equal no matter how the sides were listed.  Degenerate triples
    (a + b == c) are rejected.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        _check_positive_ints("SideTriple", (self.a, self.b, self.c))
        a, b, c = sorted((self.a, self.b, self.c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if a + b <= c:
            raise ValueError(f"not a triangle: sides {(a, b, c)} violate a + b > c")

    @property
    def perimeter(self) -> int:
        return self.a + self.b + self.c

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True, order=True)
class XyzTriple:
    """The (x, y, z) = (s-a, s-b, s-c) coordinates of an even-perimeter triangle.

    Sorted ascending on construction.  x+y+z is the semiperimeter of the
    corresponding triangle and the sides recover as (x+y, x+z, y+z).
    """

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        _check_positive_ints("XyzTriple", (self.x, self.y, self.z))
        x, y, z = sorted((self.x, self.y, self.z))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def semiperimeter(self) -> int:
        return self.x + self.y + self.z

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def xyz_to_sides(t: XyzTriple) -> SideTriple:
    """Sides of the triangle with the given (x, y, z) coordinates.

    With x <= y <= z the sides (x+y, x+z, y+z) come out already sorted;
    the largest side y+z pairs with the smallest coordinate x.
    """
    return SideTriple(t.x + t.y, t.x + t.z, t.y + t.z)


def sides_to_xyz(t: SideTriple) -> XyzTriple:
    """Inverse of xyz_to_sides; requires an even perimeter.

    Raises OddPerimeterError when a+b+c is odd, because then the
    semiperimeter is not an integer and no (x, y, z) triple exists.
    """
    p = t.perimeter
    if p % 2 == 1:
        raise OddPerimeterError(f"perimeter {p} of {t.as_tuple()} is odd")
    s = p // 2
    return XyzTriple(s - t.c, s - t.b, s - t.a)


def area_squared(t: XyzTriple) -> int:
    """Squared area (x+y+z)*x*y*z of the triangle with these coordinates."""
    return t.semiperimeter * t.x * t.y * t.z


def heron_area(t: SideTriple) -> int | None:
    """Integer area of the triangle, or None when the area is irrational.

    Works for any parity via the side-length form 16*A^2 =
    p(p-2a)(p-2b)(p-2c): the area is an integer exactly when that product
    is a perfect square whose root is divisible by 4.
    """
    p = t.perimeter
    m = p * (p - 2 * t.a) * (p - 2 * t.b) * (p - 2 * t.c)
    root = perfect_square_root(m)
    if root is None or root % 4 != 0:
        return None
    return root // 4


@dataclass(frozen=True)
class HeronTriangle:
    """A triangle whose sides and area are all integers.

    Carries the derived quantities alongside the sides; construction
    re-verifies 16*A^2 = p(p-2a)(p-2b)(p-2c) so an inconsistent record
    cannot exist.
    """

    sides: SideTriple
    perimeter: int
    semiperimeter: int
    area: int

    def __post_init__(self) -> None:
        p = self.sides.perimeter
        if self.perimeter != p:
            raise ValueError(f"perimeter {self.perimeter} != sum of sides {p}")
        if self.perimeter != 2 * self.semiperimeter:
            raise ValueError(f"perimeter {self.perimeter} is not twice {self.semiperimeter}")
        if self.area < 1:
            raise ValueError(f"area must be a positive integer, got {self.area}")
        a, b, c = self.sides.as_tuple()
        if 16 * self.area * self.area != p * (p - 2 * a) * (p - 2 * b) * (p - 2 * c):
            raise ValueError(f"area {self.area} inconsistent with sides {self.sides.as_tuple()}")

    @classmethod
    def from_sides(cls, sides: SideTriple) -> "HeronTriangle | None":
        """Build from sides, or None when the area is not an integer."""
        area = heron_area(sides)
        if area is None:
            return None
        return cls(sides=sides, perimeter=sides.perimeter, semiperimeter=sides.perimeter // 2, area=area)

    @classmethod
    def from_xyz(cls, t: XyzTriple) -> "HeronTriangle | None":
        """Build from (x, y, z) coordinates, or None when s*x*y*z is not square."""
        root = perfect_square_root(area_squared(t))
        if root is None:
            return None
        s = t.semiperimeter
        return cls(sides=xyz_to_sides(t), perimeter=2 * s, semiperimeter=s, area=root)

    @property
    def xyz(self) -> XyzTriple:
        return sides_to_xyz(self.sides)

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.perimeter, self.sides.a, self.sides.b, self.sides.c)


def is_equable(h: HeronTriangle) -> bool:
    """True iff the triangle's area equals its perimeter."""
    return h.area == h.perimeter
