"""Benchmark the compiled enumeration kernels against the Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Covers the three hot loops: projective weight enumeration, all-k-subsets
rank testing, and the exhaustive systematic-generator search.
"""

import argparse
import time

from lcdmds import construct, kernels
from lcdmds.gf import field_new


def _timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _cases():
    F8 = field_new(2, 3)
    big8 = construct.euclidean_lcd_mds(F8, 9, 4).code
    F13 = field_new(13, 1)
    big13 = construct.euclidean_lcd_mds(F13, 14, 7).code
    F4 = field_new(2, 2)
    hyper = construct.char2_qplus2(F8, 3).code
    return [
        ("min_weight [9,4] GF(8) (585 messages)",
         lambda b: b.min_weight(F8, big8.gen.tolists())),
        ("min_weight [10,3] GF(8) (73 messages)",
         lambda b: b.min_weight(F8, hyper.gen.tolists())),
        ("min_weight [14,7] GF(13) (5.2M messages)",
         lambda b: b.min_weight(F13, big13.gen.tolists())),
        ("k-subsets [14,7] GF(13) (3432 subsets)",
         lambda b: b.first_dependent_columns(F13, big13.gen.tolists())),
        ("systematic search GF(4) 3x3 (hit at 91749)",
         lambda b: b.search_systematic(F4, 3, 3)),
        ("systematic search GF(3) 2x2 (81 exhausted)",
         lambda b: b.search_systematic(field_new(3, 1), 2, 3)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-slow", action="store_true",
                    help="skip the multi-second pure-Python cases")
    args = ap.parse_args()

    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled extension not built; showing python backend only")

    print(f"{'case':52s}" + "".join(f"{name:>12s}" for name in backends)
          + f"{'speedup':>10s}")
    for label, fn in _cases():
        if args.skip_slow and "5.2M" in label:
            continue
        times = {}
        result = None
        for name, backend in backends.items():
            times[name], res = _timed(lambda b=backend: fn(b), args.repeat)
            if result is None:
                result = res
            elif res != result:
                raise AssertionError(f"backend mismatch on {label}: {res} != {result}")
        row = f"{label:52s}"
        for name in backends:
            row += f"{times[name] * 1e3:10.2f}ms"
        if len(times) == 2:
            row += f"{times['python'] / times['compiled']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
