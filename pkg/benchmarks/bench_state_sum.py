"""Compare the compiled and pure-Python state-sum kernels.

    python benchmarks/bench_state_sum.py [--max-crossings 16] [--repeat 3]
"""
import argparse
import time

from ratknot import _kernels_py
from ratknot.diagram import tangle_diagram

try:
    from ratknot import _kernels
except ImportError:
    _kernels = None


def corners_for(seq):
    d = tangle_diagram(seq).numerator()
    n_arcs, labels = d.arc_labels()
    return n_arcs, [labels[x] for cr in d.crossings for x in cr]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-crossings", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'c':>3} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for c in range(8, args.max_crossings + 1, 2):
        # alternating canonical diagram (2, 2, ..., 2) with c crossings
        n_arcs, corners = corners_for((2,) * (c // 2))
        tp, hp = best_of(lambda: _kernels_py.state_histogram(n_arcs, corners), args.repeat)
        if _kernels is None:
            print(f"{c:>3} {tp:>10.4f} {'-':>10} {'-':>8}")
            continue
        tc, hc = best_of(lambda: _kernels.state_histogram(n_arcs, corners), args.repeat)
        assert hp == hc, "backends disagree"
        print(f"{c:>3} {tp:>10.4f} {tc:>10.5f} {tp / tc:>7.0f}x")


if __name__ == "__main__":
    main()
