"""Enumeration kernels for the brute-force searches, in three interchangeable lanes.

The exhaustive scans dominate the runtime of every search, so they are
implemented three times over the same iteration order:

* ``numba``  - @njit loops over int64 scalars (kernels in
  :mod:`amicable_heron._kernels_numba`, imported on first use);
* ``numpy``  - vectorized int64 batches, one semiperimeter / shortest side
  at a time;
* ``python`` - plain loops over Python ints, exact at any magnitude.

Select a lane per call via the ``backend=`` argument, or process-wide with
the ``HERON_BACKEND`` environment variable.  All lanes return identical
rows; only speed differs.  When nothing is pinned, small scans run on the
numpy lane (importing numba costs more wall time than they take) and
anything past the cutover runs jit-compiled.

The fixed-width lanes compute products as large as p_max**4 / 27 in int64.
``kernel_capacity_ok`` checks that bound exactly in Python integers, and
the dispatcher raises OverflowError instead of letting a kernel wrap.  The
python lane has no such limit.
"""

from __future__ import annotations

import importlib.util
import math
import os

import numpy as np

BACKEND_ENV = "HERON_BACKEND"

HAS_NUMBA = importlib.util.find_spec("numba") is not None

# One-shot numba import plus compiled-cache load costs ~0.7 s; below this
# bound the vectorized lane finishes long before that.
_JIT_CUTOVER = 2000

# Fixed-width lanes must keep every intermediate below 2**62: the largest
# product is bounded by p_max**4/27, and the square-root fixup evaluates
# (r+1)**2 <= 2n, which needs one spare bit.
_INT64_HEADROOM = 2**62

_ROW_WIDTH_XYZ = 5  # s, x, y, z, area
_ROW_WIDTH_SIDE = 4  # a, b, c, area

_numba_kernels = None


def _jit_kernels():
    global _numba_kernels
    if _numba_kernels is None:
        from . import _kernels_numba

        _numba_kernels = _kernels_numba
    return _numba_kernels


def kernel_capacity_ok(p_max: int) -> bool:
    """True when every intermediate of a scan to p_max fits in int64."""
    return max(p_max, 0) ** 4 // 27 < _INT64_HEADROOM


def available_backends() -> tuple[str, ...]:
    if HAS_NUMBA:
        return ("numba", "numpy", "python")
    return ("numpy", "python")


def default_backend() -> str:
    return "numba" if HAS_NUMBA else "numpy"


def resolve_backend(backend: str | None = None, p_max: int | None = None) -> str:
    """Resolve a lane name: explicit argument, then HERON_BACKEND, then sizing.

    An explicit argument or environment value pins the lane exactly.  In
    auto mode, bounds at or below the jit cutover go to the numpy lane;
    an unknown bound (p_max=None) resolves to the plain default.
    """
    name = backend if backend is not None else os.environ.get(BACKEND_ENV, "").strip().lower() or None
    if name is None or name == "auto":
        if HAS_NUMBA and (p_max is None or p_max > _JIT_CUTOVER):
            return "numba"
        return "numpy"
    if name not in ("numba", "numpy", "python"):
        raise ValueError(f"unknown backend {name!r}; expected numba, numpy, or python")
    if name == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return name


def _check_capacity(p_max: int, lane: str) -> None:
    if not kernel_capacity_ok(p_max):
        raise OverflowError(
            f"scan to p_max={p_max} can exceed int64 in the {lane} lane; "
            f"use backend='python' for exact arithmetic at any magnitude"
        )


# ---------------------------------------------------------------------------
# python lane: exact reference, arbitrary precision
# ---------------------------------------------------------------------------

def _xyz_scan_python(s_max: int) -> np.ndarray:
    rows = []
    for s in range(3, s_max + 1):
        for x in range(1, s // 3 + 1):
            for y in range(x, (s - x) // 2 + 1):
                z = s - x - y
                n = s * x * y * z
                r = math.isqrt(n)
                if r * r == n:
                    rows.append((s, x, y, z, r))
    return _as_rows(rows, _ROW_WIDTH_XYZ)


def _side_scan_python(p_max: int) -> np.ndarray:
    rows = []
    for a in range(1, p_max // 3 + 1):
        for b in range(a, (p_max - a) // 2 + 1):
            c_hi = min(a + b - 1, p_max - a - b)
            for c in range(b, c_hi + 1):
                p = a + b + c
                m = p * (p - 2 * a) * (p - 2 * b) * (p - 2 * c)
                r = math.isqrt(m)
                if r * r == m and r % 4 == 0:
                    rows.append((a, b, c, r // 4))
    return _as_rows(rows, _ROW_WIDTH_SIDE)


def _as_rows(rows: list[tuple[int, ...]], width: int) -> np.ndarray:
    if not rows:
        return np.empty((0, width), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


# ---------------------------------------------------------------------------
# numpy lane: vectorized batches
# ---------------------------------------------------------------------------

def _ragged_arange(starts: np.ndarray, counts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Expand per-group (start, count) into one flat increasing run per group."""
    total = int(counts.sum())
    group_offsets = np.cumsum(counts) - counts
    flat_start = np.repeat(starts, counts)
    within = np.arange(total, dtype=np.int64) - np.repeat(group_offsets, counts)
    return flat_start, flat_start + within


def _isqrt_vec(n: np.ndarray) -> np.ndarray:
    """Exact floor square root of nonnegative int64 values via float + fixup."""
    r = np.sqrt(n.astype(np.float64)).astype(np.int64)
    r = np.where(r * r > n, r - 1, r)
    r = np.where((r + 1) * (r + 1) <= n, r + 1, r)
    return r


def _xyz_scan_numpy(s_max: int) -> np.ndarray:
    chunks = []
    for s in range(3, s_max + 1):
        x = np.arange(1, s // 3 + 1, dtype=np.int64)
        counts = (s - x) // 2 - x + 1
        xs, ys = _ragged_arange(x, counts)
        zs = s - xs - ys
        n = s * xs * ys * zs
        r = _isqrt_vec(n)
        hit = r * r == n
        if hit.any():
            k = int(hit.sum())
            rows = np.empty((k, _ROW_WIDTH_XYZ), dtype=np.int64)
            rows[:, 0] = s
            rows[:, 1] = xs[hit]
            rows[:, 2] = ys[hit]
            rows[:, 3] = zs[hit]
            rows[:, 4] = r[hit]
            chunks.append(rows)
    if not chunks:
        return np.empty((0, _ROW_WIDTH_XYZ), dtype=np.int64)
    return np.concatenate(chunks)


def _side_scan_numpy(p_max: int) -> np.ndarray:
    chunks = []
    for a in range(1, p_max // 3 + 1):
        b = np.arange(a, (p_max - a) // 2 + 1, dtype=np.int64)
        c_hi = np.minimum(a + b - 1, p_max - a - b)
        counts = c_hi - b + 1
        bs, cs = _ragged_arange(b, counts)
        p = a + bs + cs
        m = p * (p - 2 * a) * (p - 2 * bs) * (p - 2 * cs)
        r = _isqrt_vec(m)
        hit = (r * r == m) & (r % 4 == 0)
        if hit.any():
            k = int(hit.sum())
            rows = np.empty((k, _ROW_WIDTH_SIDE), dtype=np.int64)
            rows[:, 0] = a
            rows[:, 1] = bs[hit]
            rows[:, 2] = cs[hit]
            rows[:, 3] = r[hit] // 4
            chunks.append(rows)
    if not chunks:
        return np.empty((0, _ROW_WIDTH_SIDE), dtype=np.int64)
    return np.concatenate(chunks)


# ---------------------------------------------------------------------------
# dispatchers
# ---------------------------------------------------------------------------

def heron_xyz_rows(p_max: int, backend: str | None = None) -> np.ndarray:
    """All (s, x, y, z, area) rows with integer area and perimeter 2s <= p_max.

    Iterates semiperimeters ascending, then x, then y; covers every valid
    x <= y <= z triple exactly once.  Rows arrive in scan order.
    """
    lane = resolve_backend(backend, p_max)
    s_max = p_max // 2
    if lane == "python":
        return _xyz_scan_python(s_max)
    _check_capacity(p_max, lane)
    if lane == "numba":
        return _jit_kernels().xyz_scan(s_max)
    return _xyz_scan_numpy(s_max)


def heron_side_rows(p_max: int, backend: str | None = None) -> np.ndarray:
    """All (a, b, c, area) rows with integer area, a <= b <= c, a+b > c, a+b+c <= p_max.

    Independent of the xyz scan: iterates raw side triples of every
    perimeter parity, so it can observe (or rule out) odd-perimeter hits.
    """
    lane = resolve_backend(backend, p_max)
    if lane == "python":
        return _side_scan_python(p_max)
    _check_capacity(p_max, lane)
    if lane == "numba":
        return _jit_kernels().side_scan(p_max)
    return _side_scan_numpy(p_max)


def warmup(backend: str | None = None) -> str:
    """Compile/exercise the selected lane on a tiny scan; returns the lane name."""
    lane = resolve_backend(backend)
    heron_xyz_rows(20, backend=lane)
    heron_side_rows(20, backend=lane)
    return lane
