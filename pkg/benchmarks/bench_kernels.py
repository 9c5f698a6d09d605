"""Benchmark the compiled elimination kernels against the pure fallback.

Matrices are taken from the actual workload: differentials of the cochain
model and of the quotient model on moderately large complexes, plus cellular
boundary matrices.  Both backends run behind the same sparse front-end, so
the comparison isolates the dense core.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import statistics
import time

from rtoric import (
    CochainAlgebra,
    SimplicialComplex,
    parse_char_matrix,
    quotient_complex,
    squarefree_model,
)
from rtoric import kernels
from rtoric import _kernels_py

try:
    from rtoric import _kernels_cy
except ImportError:
    _kernels_cy = None


def workload_matrices():
    mats = []
    rng = random.Random(17)
    # cochain model differentials on the boundary of the 4-simplex
    sc = SimplicialComplex(5, [tuple(sorted(set(range(5)) - {i})) for i in range(5)])
    rows = [[rng.randint(0, 1) for _ in range(5)] for _ in range(3)]
    if not any(any(r) for r in rows):
        rows[0][0] = 1
    algebra = CochainAlgebra(sc, parse_char_matrix({"n": 3, "m": 5, "rows": rows}))
    for d in range(4):
        mats.append(algebra.differential_matrix(d))
    # quotient model of a 6-vertex cycle
    cycle = SimplicialComplex(6, [(i, (i + 1) % 6) for i in range(6)])
    sq = squarefree_model(cycle)
    for d in range(2):
        mats.append(sq.differential_matrix(d))
    # cellular boundary matrices of the quotient by a free diagonal
    q = quotient_complex(sc, [(1, 1, 1, 1, 1)])
    for d in (1, 2, 3):
        mats.append(q.boundary_matrix(d))
    return mats


def run_backend(impl, mats, repeat):
    saved = kernels._impl
    kernels._impl = impl
    try:
        times = []
        for _ in range(repeat):
            start = time.perf_counter()
            for mat in mats:
                for p in (2, 3):
                    kernels.rank_mod_p(mat.nrows, mat.ncols, mat.entries, p)
                kernels.invariant_factors(mat.nrows, mat.ncols, mat.entries)
            times.append(time.perf_counter() - start)
        return min(times), statistics.median(times)
    finally:
        kernels._impl = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    mats = workload_matrices()
    total = sum(len(m.entries) for m in mats)
    shapes = ", ".join(f"{m.nrows}x{m.ncols}" for m in mats)
    print(f"{len(mats)} matrices ({total} nonzeros): {shapes}")
    print(f"active backend: {kernels.BACKEND}")

    results = {}
    pure_best, pure_med = run_backend(_kernels_py, mats, args.repeat)
    results["pure"] = pure_best
    print(f"pure:     best {pure_best * 1e3:8.2f} ms   median {pure_med * 1e3:8.2f} ms")
    if _kernels_cy is not None:
        cy_best, cy_med = run_backend(_kernels_cy, mats, args.repeat)
        results["compiled"] = cy_best
        print(f"compiled: best {cy_best * 1e3:8.2f} ms   median {cy_med * 1e3:8.2f} ms")
        print(f"speedup (pure/compiled): {pure_best / cy_best:.2f}x")
    else:
        print("compiled backend not built; only the pure fallback was timed")


if __name__ == "__main__":
    main()
