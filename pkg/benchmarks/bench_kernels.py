"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are checked for identical results before timing.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from knotfourier import _kernels_py
from knotfourier.braid_core import BraidWord
from knotfourier.diagram import _smoothing_pairs, pd_from_closure

try:
    from knotfourier import _kernels as compiled
except ImportError:
    compiled = None


def workloads(rng):
    word = tuple(int(g) for g in rng.choice([1, -1], 4000) * rng.integers(1, 6, 4000))
    # many cancelling pairs so free reduction has work to do
    cancel = word[:500] + tuple(-g for g in reversed(word[:500]))
    artin = [int(g) for g in rng.choice([1, -1], 60) * rng.integers(1, 4, 60)]
    pd = pd_from_closure(BraidWord(3, (1, -2) * 8))
    n, pa, pb = _smoothing_pairs(pd)
    t = np.arange(20000) / 20000
    x = np.cos(2 * np.pi * 3 * t + 0.1)
    y = np.cos(2 * np.pi * 5 * t + 0.7)
    return {
        "free_reduce": ("free_reduce", (word + cancel,)),
        "artin_images": ("artin_images", (4, artin)),
        "bracket_state_counts (16 crossings)": ("bracket_state_counts", (n, pa, pb, pd.loops)),
        "grid_candidates (20000 samples)": ("grid_candidates", (x, y)),
    }


def same(a, b) -> bool:
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return a == b


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if compiled is None:
        print("compiled extension not built; run: python3 setup.py build_ext --inplace")
        return
    rng = np.random.default_rng(0)
    print(f"{'kernel':40s} {'python ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for label, (name, call_args) in workloads(rng).items():
        py_fn, c_fn = getattr(_kernels_py, name), getattr(compiled, name)
        if not same(py_fn(*call_args), c_fn(*call_args)):
            raise SystemExit(f"{name}: backends disagree")
        py = min(timeit.repeat(lambda: py_fn(*call_args), number=1, repeat=args.repeat))
        c = min(timeit.repeat(lambda: c_fn(*call_args), number=1, repeat=args.repeat))
        print(f"{label:40s} {py * 1e3:10.2f} {c * 1e3:12.2f} {py / c:7.1f}x")


if __name__ == "__main__":
    main()
