"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

import argparse
import time

import numpy as np

from sysgraph import _backend, boolean_cube, clique_product
from sysgraph.constructions import replace_with_clique


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t)
    return min(times), out


def cases(quick):
    cp3, cp5 = clique_product(3), clique_product(4 if quick else 5)
    g20 = replace_with_clique(boolean_cube(2))  # 20 vertices, 3 colors
    keep = np.ones(cp5.dimension, dtype=np.uint8)
    keep[-1] = 0
    yield (f"label_components n={cp5.num_vertices}", "label_components",
           (cp5.table, keep))
    yield "min_boundary_sweep Q4 (2^16 sets)", "min_boundary_sweep", (boolean_cube(4).table, 16)
    yield "min_boundary_sweep n=20 (2^20 sets)", "min_boundary_sweep", (g20.table, 20)
    s = 4 if quick else 5
    yield (f"min_boundary_combinations CP3 s={s}", "min_boundary_combinations",
           (cp3.table, s, 0, 42))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()
    if _backend.compiled is None:
        raise SystemExit("compiled extension not built; run pip install -e .")
    print(f"{'kernel':44s} {'cython s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for label, name, fargs in cases(args.quick):
        tc, oc = best_of(args.repeat, getattr(_backend.compiled, name), *fargs)
        tp, op = best_of(args.repeat, getattr(_backend.pure, name), *fargs)
        same = all(np.array_equal(np.asarray(a), np.asarray(b)) for a, b in zip(oc, op))
        flag = "" if same else "  MISMATCH"
        print(f"{label:44s} {tc:10.4f} {tp:10.4f} {tp / tc:8.1f}x{flag}")


if __name__ == "__main__":
    main()
