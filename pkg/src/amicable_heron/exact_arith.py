"""Exact integer arithmetic primitives.

Everything here operates on plain Python integers, so results are exact at
any magnitude and nothing can silently wrap.  The fixed-width accelerated
kernels live in :mod:`amicable_heron.backends` and carry their own capacity
guard; this module is the reference arithmetic they are checked against.
"""

from __future__ import annotations

import math


def isqrt(n: int) -> int:
    """Floor square root: the unique r with r*r <= n < (r+1)*(r+1)."""
    if n < 0:
        raise ValueError(f"isqrt requires n >= 0, got {n}")
    return math.isqrt(n)


def perfect_square_root(n: int) -> int | None:
    """Return r with r*r == n, or None when n is not a perfect square."""
    r = isqrt(n)
    return r if r * r == n else None


def is_perfect_square(n: int) -> bool:
    """True iff n is a perfect square (0 and 1 included)."""
    return perfect_square_root(n) is not None


def divisors(n: int) -> list[int]:
    """All positive divisors of n in strictly increasing order.

    Plain trial division up to sqrt(n); the search kernels only ever ask
    for divisors of numbers up to 64*12**3 = 110592, so nothing smarter
    is warranted.
    """
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large
