"""Compare the compiled and pure-Python kernels on representative work.

Run as a script:  python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import time

from powker import _kernel
from powker.bounds import filtration_table, sweep
from powker.ffpoly import PrimeModulus
from powker.homspace import ma_space


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_rref(rng):
    p = 13
    rows = [[rng.randrange(p) for _ in range(120)] for _ in range(160)]
    return lambda: _kernel.rref(rows, 120, p)


def bench_reduce_slice(rng):
    p = 7
    fcoeffs = [rng.randrange(p) for _ in range(24)] + [1]
    base = [rng.randrange(p) for _ in range(400)]
    return lambda: _kernel.reduce_slice(list(base), fcoeffs, p)


CASES = [
    ("rref 160x120 over F_13", bench_rref),
    ("reduce_slice deg 400 by deg 24", bench_reduce_slice),
    ("ma_space(11, 3)", lambda rng: lambda: ma_space(PrimeModulus(11), 3)),
    ("filtration_table(7, 2)", lambda rng: lambda: filtration_table(PrimeModulus(7), 2)),
    ("sweep(35)", lambda rng: lambda: sweep(35, parallelism=1)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args()

    backends = _kernel.available()
    print(f"backends: {', '.join(backends)}")
    width = max(len(name) for name, _ in CASES)
    header = f"{'case'.ljust(width)}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) > 1:
        header += "   speedup"
    print(header)
    print("-" * len(header))

    for name, make in CASES:
        results = []
        for backend in backends:
            _kernel.use(backend)
            fn = make(random.Random(2718))
            results.append(timed(fn, args.repeat))
        line = f"{name.ljust(width)}  " + "  ".join(f"{t * 1000:>8.2f}ms" for t in results)
        if len(results) > 1 and results[0] > 0:
            line += f"   {results[-1] / results[0]:>6.1f}x"
        print(line)

    _kernel.use(backends[0])


if __name__ == "__main__":
    main()
