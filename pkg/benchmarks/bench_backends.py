"""Benchmark the compiled resolution kernel against the pure-Python twin.

Run from the repository root after building the extension:

    python benchmarks/bench_backends.py [--trials N]

Times `resolve_sum` (the hot path behind every bracket computation) on the
catalog fixtures plus a few random stress diagrams, confirms both backends
return identical results, and reports the speedup.
"""

import argparse
import time

from tiedbracket import _kernel_py
from tiedbracket.catalog import load_catalog
from tiedbracket.diagram import random_diagram
from tiedbracket.engine import OrderedStrategy, _prepare

try:
    from tiedbracket import _kernel_cy
except ImportError:
    _kernel_cy = None


def bench(fn, args, trials):
    best = float("inf")
    for _ in range(trials):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=5)
    opts = parser.parse_args()

    cases = []
    for entry in load_catalog():
        d = entry.diagram()
        if len(d.crossings) >= 2:
            cases.append((entry.name, d))
    for seed, n, colors in ((7, 12, 3), (13, 14, 3), (29, 14, 2)):
        cases.append((f"random-{n}x{colors} (seed {seed})", random_diagram(seed, n, colors)))

    if _kernel_cy is None:
        print("compiled kernel not available; showing pure-Python timings only")
    header = f"{'fixture':<24} {'crossings':>9} {'leaves':>8} {'python':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    total_py = total_cy = 0.0
    for name, d in cases:
        slots, colors, loops, _ = _prepare(d, OrderedStrategy())
        n_leaves = len(_kernel_py.resolve_leaves(slots, colors, loops, -1))
        t_py, r_py = bench(_kernel_py.resolve_sum, (slots, colors, loops, -1), opts.trials)
        total_py += t_py
        if _kernel_cy is not None:
            t_cy, r_cy = bench(_kernel_cy.resolve_sum, (slots, colors, loops, -1), opts.trials)
            total_cy += t_cy
            assert r_py == r_cy, f"backend mismatch on {name}"
            print(f"{name:<24} {len(d.crossings):>9} {n_leaves:>8} {t_py:>9.4f}s {t_cy:>9.4f}s {t_py / t_cy:>7.1f}x")
        else:
            print(f"{name:<24} {len(d.crossings):>9} {n_leaves:>8} {t_py:>9.4f}s {'-':>10} {'-':>8}")
    if _kernel_cy is not None and total_cy:
        print("-" * len(header))
        print(f"{'total':<24} {'':>9} {'':>8} {total_py:>9.4f}s {total_cy:>9.4f}s {total_py / total_cy:>7.1f}x")


if __name__ == "__main__":
    main()
