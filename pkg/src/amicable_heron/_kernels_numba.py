"""Jit-compiled scan kernels; imported lazily so CLI startup stays light.

Same iteration order as the pure-python lane in
:mod:`amicable_heron.backends`.  cache=True persists the compiled code on
disk, so only the very first call in a fresh checkout pays compilation.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def isqrt64(n):
    # math.isqrt is unavailable in nopython mode; the float seed is within
    # 1 of the true root for all n < 2**62, and the fixup loops make the
    # result exact.
    if n <= 0:
        return np.int64(0)
    r = np.int64(math.sqrt(np.float64(n)))
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


@njit(cache=True)
def xyz_scan(s_max):
    cap = 1024
    out = np.empty((cap, 5), dtype=np.int64)
    count = 0
    for s in range(3, s_max + 1):
        for x in range(1, s // 3 + 1):
            for y in range(x, (s - x) // 2 + 1):
                z = s - x - y
                n = s * x * y * z
                r = isqrt64(n)
                if r * r == n:
                    if count == cap:
                        cap *= 2
                        grown = np.empty((cap, 5), dtype=np.int64)
                        grown[:count] = out[:count]
                        out = grown
                    out[count, 0] = s
                    out[count, 1] = x
                    out[count, 2] = y
                    out[count, 3] = z
                    out[count, 4] = r
                    count += 1
    return out[:count].copy()


@njit(cache=True)
def side_scan(p_max):
    cap = 1024
    out = np.empty((cap, 4), dtype=np.int64)
    count = 0
    for a in range(1, p_max // 3 + 1):
        for b in range(a, (p_max - a) // 2 + 1):
            c_hi = min(a + b - 1, p_max - a - b)
            for c in range(b, c_hi + 1):
                p = a + b + c
                m = p * (p - 2 * a) * (p - 2 * b) * (p - 2 * c)
                r = isqrt64(m)
                if r * r == m and r % 4 == 0:
                    if count == cap:
                        cap *= 2
                        grown = np.empty((cap, 4), dtype=np.int64)
                        grown[:count] = out[:count]
                        out = grown
                    out[count, 0] = a
                    out[count, 1] = b
                    out[count, 2] = c
                    out[count, 3] = r // 4
                    count += 1
    return out[:count].copy()
