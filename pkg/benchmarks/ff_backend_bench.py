"""Compare the two finite-field containment backends.

Runs the same line counts through the numba kernel and the pure numpy
evaluator and prints wall times. The first numba call includes JIT
compilation unless the on-disk cache is already warm, so it is reported
separately from the steady-state median.

Usage: python benchmarks/ff_backend_bench.py [--repeats 5] [--big]
"""

import argparse
import statistics
import time

from arcline.ff_search import FFConfig, count_lines_ff, line_space_size
from arcline.polycore import parse_poly

FERMAT = "x0^3 + x1^3 + x2^3 + x3^3"
QUADRIC4 = "x0*x4 - x1*x3 + x2^2"


def cases(big: bool):
    yield "fermat cubic, P^3, p=7", FFConfig(7, 3, (parse_poly(FERMAT),))
    yield "fermat cubic, P^3, p=11", FFConfig(11, 3, (parse_poly(FERMAT),))
    yield "quadric, P^4, p=5", FFConfig(5, 4, (parse_poly(QUADRIC4),))
    if big:
        yield "fermat cubic, P^3, p=17", FFConfig(17, 3, (parse_poly(FERMAT),))
        yield "quadric, P^4, p=7", FFConfig(7, 4, (parse_poly(QUADRIC4),))


def timed(cfg, backend):
    start = time.perf_counter()
    count = count_lines_ff(cfg, backend=backend)
    return count, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="steady-state samples per backend (default 5)")
    parser.add_argument("--big", action="store_true",
                        help="include the larger line spaces")
    args = parser.parse_args()

    header = (f"{'case':<28} {'lines':>8} {'count':>6} "
              f"{'numba 1st':>10} {'numba':>9} {'numpy':>9} {'ratio':>7}")
    print(header)
    print("-" * len(header))
    for name, cfg in cases(args.big):
        space = line_space_size(cfg.n, cfg.p)
        count, first = timed(cfg, "numba")
        numba_times = []
        numpy_times = []
        for _ in range(args.repeats):
            c2, t = timed(cfg, "numba")
            assert c2 == count
            numba_times.append(t)
        for _ in range(args.repeats):
            c2, t = timed(cfg, "numpy")
            assert c2 == count
            numpy_times.append(t)
        nb = statistics.median(numba_times)
        np_ = statistics.median(numpy_times)
        ratio = np_ / nb if nb > 0 else float("inf")
        print(f"{name:<28} {space:>8} {count:>6} "
              f"{first * 1000:>8.1f}ms {nb * 1000:>7.1f}ms "
              f"{np_ * 1000:>7.1f}ms {ratio:>6.1f}x")


if __name__ == "__main__":
    main()
