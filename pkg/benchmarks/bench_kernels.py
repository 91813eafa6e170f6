"""Compiled vs pure-Python elimination kernel on recorded workload matrices.

The inputs are captured from real computations (root decomposition and the
invariant-form systems of a few quotients), so they carry the sparsity and
entry sizes the library actually produces.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from lorentzhom import _kernels_py
from lorentzhom.exact import _backend, linalg


def record_workload():
    """Run representative computations and keep every elimination input."""
    seen = []
    original = linalg.rref_int

    def spy(rows, ncols):
        rows = [list(r) for r in rows]
        seen.append((rows, ncols))
        return original(rows, ncols)

    linalg.rref_int = spy
    try:
        from lorentzhom.catalog import iwasawa_of, so, standard_subalgebra
        from lorentzhom.forms import invariant_sym_forms, lorentz_certificate, quotient_rep

        for p, q, h in [(1, 6, "so(1,5)"), (2, 5, "so(1,5)"), (2, 6, "su(1,3)"), (2, 8, "su(1,4)")]:
            g = so(p, q)
            iwasawa_of(g)
            space = invariant_sym_forms(quotient_rep(g, standard_subalgebra(g, h)))
            lorentz_certificate(space)
    finally:
        linalg.rref_int = original
    return seen


def bench(fn, workload, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        for rows, ncols in workload:
            fn(rows, ncols)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    workload = record_workload()
    cells = sum(len(r) * n for r, n in workload)
    print(f"workload: {len(workload)} eliminations, {cells} input cells")
    py = bench(_kernels_py.rref_int, workload, args.repeat)
    print(f"python    {py:8.3f} s")
    if _backend.BACKEND != "compiled":
        print("compiled  unavailable (extension not built or LORENTZHOM_PURE_PYTHON set)")
        return
    from lorentzhom import _kernels

    for rows, ncols in workload:
        if _kernels.rref_int(rows, ncols) != _kernels_py.rref_int(rows, ncols):
            raise SystemExit("kernels disagree")
    cy = bench(_kernels.rref_int, workload, args.repeat)
    print(f"compiled  {cy:8.3f} s   speedup {py / cy:5.1f}x (results identical)")


if __name__ == "__main__":
    main()
