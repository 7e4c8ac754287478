"""Compare the compiled and pure-Python kernel backends.

Each workload runs through the public API with the backend switched by
``kernels.use``; timings are CPU seconds from ``time.process_time``.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from ababfree import kernels
from ababfree.constructions import build_Hc, build_tree_hypergraph
from ababfree.generators import random_curve_family, random_free_hypergraph
from ababfree.geometry.lenses import realize_as_curves
from ababfree.hypergraph import colorability_oracle
from ababfree.pattern import find_abl_free_order, is_abl_free_ordered


def _workloads():
    rng = random.Random(0)
    free = [random_free_hypergraph(rng, 200, 300, tries=20) for _ in range(10)]
    small = [random_free_hypergraph(rng, 7, 10) for _ in range(800)]
    curves = [random_curve_family(rng, 12, 40, 4)[1] for _ in range(200)]
    oracle = [random_free_hypergraph(rng, 20, 40, tries=10) for _ in range(400)]
    realize_inputs = free[:3] + [build_tree_hypergraph(3, 4), build_Hc(2, 4)]
    return {
        "is_abl_free_ordered (alternation, first_violation)": lambda: [is_abl_free_ordered(h, 2) for h in free],
        "colorability_oracle (lex_least_coloring)": lambda: [colorability_oracle(h, 2) for h in oracle],
        "find_abl_free_order (first_free_order)": lambda: [find_abl_free_order(h, 2) for h in small],
        "CurveFamily.max_crossings (sign_changes)": lambda: [f.max_crossings() for f in curves],
        "realize_as_curves (eliminate_levels)": lambda: [realize_as_curves(h) for h in realize_inputs],
    }


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.process_time()
        fn()
        best = min(best, time.process_time() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="runs per workload; the fastest is kept")
    args = parser.parse_args()
    backends = kernels.available()
    original = kernels.BACKEND
    work = _workloads()
    print(f"{'workload':<55}" + "".join(f"{b:>10}" for b in backends) + ("   speedup" if len(backends) == 2 else ""))
    try:
        for name, fn in work.items():
            times = []
            for b in backends:
                kernels.use(b)
                times.append(_time(fn, args.repeat))
            row = f"{name:<55}" + "".join(f"{t:>9.3f}s" for t in times)
            if len(times) == 2:
                row += f"{times[0] / max(times[1], 1e-9):>9.1f}x"
            print(row)
    finally:
        kernels.use(original)
    if len(backends) == 1:
        print("compiled kernels not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
