"""Compare the compiled and pure-Python Albert product kernels.

    python benchmarks/bench_kernels.py [--pairs N] [--repeat R]

Reports the raw 27x27 kernel rate and the time to evaluate the Jordan
identity at random Albert elements through each backend, and checks that
both backends return identical results.
"""

import argparse
import random
import time
import timeit

from dijordan import albert as al
from dijordan import diterm as dt
from dijordan import kernels
from dijordan.kernels import _pyalbert


def make_pairs(n, seed=0, size=3):
    rng = random.Random(seed)
    return [(tuple(rng.randint(-size, size) for _ in range(27)),
             tuple(rng.randint(-size, size) for _ in range(27))) for _ in range(n)]


def bench_raw(name, pairs, repeat):
    fn = kernels._BACKENDS[name].jordan2
    best = min(timeit.repeat(lambda: [fn(a, b) for a, b in pairs], number=1, repeat=repeat))
    return len(pairs) / best


def bench_identity(name, trials, seed=0):
    kernels.set_backend(name)
    g = dt.jordan_identity()
    rng = random.Random(seed)
    start = time.perf_counter()
    for _ in range(trials):
        values = {v: al.random_element(rng) for v in sorted(dt.term_variables(g))}
        assert not al.evaluate_albert(g, values)
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--trials", type=int, default=200)
    args = ap.parse_args()

    names = kernels.available()
    pairs = make_pairs(args.pairs)
    if "cython" in names:
        mod = kernels._BACKENDS["cython"]
        mismatches = sum(tuple(mod.jordan2(a, b)) != tuple(_pyalbert.jordan2(a, b)) for a, b in pairs)
        print(f"backend agreement: {len(pairs) - mismatches}/{len(pairs)} identical")
    else:
        print("compiled kernel not built; only the Python backend is timed")

    before = kernels.backend()
    rates = {}
    print(f"{'backend':<8} {'products/s':>12} {'identity evals (s)':>20}")
    for name in names:
        rates[name] = bench_raw(name, pairs, args.repeat)
        secs = bench_identity(name, args.trials)
        print(f"{name:<8} {rates[name]:>12.0f} {secs:>20.3f}")
    kernels.set_backend(before)
    if len(rates) == 2:
        print(f"speedup of raw kernel: {rates['cython'] / rates['python']:.1f}x")


if __name__ == "__main__":
    main()
