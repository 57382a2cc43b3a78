"""Compare the compiled and pure-Python fraction-free elimination kernels.

Usage: python3 benchmarks/bench_kernels.py [--size N] [--repeat R] [--seed S]
"""

import argparse
import copy
import random
import timeit

from g2forge import _kernels_py

try:
    from g2forge import _kernels
except ImportError:
    _kernels = None


def integer_matrix(rng, n, m, box):
    return [[rng.randint(-box, box) for _ in range(m)] for _ in range(n)]


def quad_matrix(rng, n, m, box):
    return integer_matrix(rng, n, m, box), integer_matrix(rng, n, m, box)


def bench(fn, a, b, ncols, repeat):
    def once():
        fn(copy.deepcopy(a), copy.deepcopy(b) if b is not None else None, ncols)

    return min(timeit.repeat(once, number=1, repeat=repeat))


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--size", type=int, nargs="*", default=[14, 49, 98])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rng = random.Random(args.seed)
    kernels = [("python", _kernels_py.ff_gauss_jordan)]
    if _kernels is not None:
        kernels.append(("cython", _kernels.ff_gauss_jordan))
    else:
        print("compiled kernel unavailable; timing the pure-Python kernel only")
    print(f"{'case':<16}" + "".join(f"{name:>12}" for name, _ in kernels) + f"{'speedup':>10}")
    for n in args.size:
        cases = [
            (f"Z {n}x{n}", integer_matrix(rng, n, n, 9), None),
            (f"Z[√15] {n}x{n}", *quad_matrix(rng, n, n, 9)),
        ]
        for label, a, b in cases:
            results = [fn(copy.deepcopy(a), copy.deepcopy(b) if b is not None else None, n) for _, fn in kernels]
            if any(r != results[0] for r in results[1:]):
                raise SystemExit(f"kernels disagree on {label}")
            times = [bench(fn, a, b, n, args.repeat) for _, fn in kernels]
            speed = f"{times[0] / times[-1]:.2f}x" if len(times) > 1 else "-"
            print(f"{label:<16}" + "".join(f"{t * 1000:>10.1f}ms" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
