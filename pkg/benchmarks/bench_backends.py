"""Time the enumeration kernels across backends.

Run:  python benchmarks/bench_backends.py [--p-max N] [--repeat K]

The numba lane is compiled (or loaded from cache) during warmup, so the
timings below measure steady-state kernel speed only.
"""

import argparse
import time

from amicable_heron import backends


def bench(fn, p_max, lane, repeat):
    best = float("inf")
    rows = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        rows = fn(p_max, backend=lane)
        best = min(best, time.perf_counter() - t0)
    return best, rows.shape[0]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-max", type=int, default=1000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument(
        "--backends",
        nargs="*",
        default=None,
        help="lanes to time (default: all available)",
    )
    args = parser.parse_args()

    lanes = args.backends or list(backends.available_backends())
    for lane in lanes:
        backends.warmup(lane)

    results = {}
    census = None
    for lane in lanes:
        t_xyz, n_xyz = bench(backends.heron_xyz_rows, args.p_max, lane, args.repeat)
        t_side, n_side = bench(backends.heron_side_rows, args.p_max, lane, args.repeat)
        assert n_xyz == n_side, f"lane {lane} disagrees on the census"
        assert census is None or census == n_xyz, f"lane {lane} disagrees with {census} triangles"
        census = n_xyz
        results[lane] = (t_xyz, t_side)

    slowest_xyz = max(t for t, _ in results.values())
    slowest_side = max(t for _, t in results.values())
    print(f"p_max={args.p_max}: {census} Heron triangles; best of {args.repeat} runs")
    print(f"{'backend':>8} {'xyz scan [s]':>14} {'side scan [s]':>14} {'speedup':>14}")
    for lane, (t_xyz, t_side) in results.items():
        speed = f"{slowest_xyz / t_xyz:.1f}x / {slowest_side / t_side:.1f}x"
        print(f"{lane:>8} {t_xyz:>14.4f} {t_side:>14.4f} {speed:>14}")


if __name__ == "__main__":
    main()
