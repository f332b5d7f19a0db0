"""Benchmark the compiled kernels against the NumPy fallback.

Times each kernel on identical inputs and checks both backends agree.
Usage: python benchmarks/bench_backends.py [--quick]
"""

import argparse
import time

import numpy as np

from starcomm.backend import load_backend


def sym_gens(n):
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    cycle = [(i + 1) % n for i in range(n)]
    return np.array([swap, cycle], dtype=np.int32)


def dihedral_gens(n):
    rotation = [(i + 1) % n for i in range(n)]
    reflection = [(n - i) % n for i in range(n)]
    return np.array([rotation, reflection], dtype=np.int32)


def best_of(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def build_inputs(backend, n_points, gens=None):
    if gens is None:
        gens = sym_gens(n_points)
    rows, truncated = backend.closure_images(gens, 100000)
    assert not truncated
    table = backend.mult_table(rows, gens)
    inv = backend.find_rows(rows, np.argsort(rows, axis=1).astype(np.int32))
    orders = backend.element_orders(rows)
    return rows, table, inv, orders


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    python_backend = load_backend("python")
    try:
        compiled_backend = load_backend("compiled")
    except ImportError:
        print("compiled kernels are not built; run pip install -e . first")
        return

    table_points = 5 if args.quick else 6  # mult table on Sym(5)/Sym(6)
    closure_points = 6 if args.quick else 7  # closure on Sym(6)/Sym(7)

    rows, table, inv, orders = build_inputs(python_backend, table_points)
    n = len(rows)
    everything = np.arange(n, dtype=np.int64)
    sub = everything[orders % 2 == 1]  # odd-order elements as a medium seed set

    workloads = [
        (
            f"closure_images Sym({closure_points})",
            lambda b: b.closure_images(sym_gens(closure_points), 100000),
        ),
        (f"mult_table n={n}", lambda b: b.mult_table(rows, sym_gens(table_points))),
        (f"element_orders n={n}", lambda b: b.element_orders(rows)),
        (
            f"coprime sweep {n}x{n}",
            lambda b: b.commutator_mask(table, inv, orders, everything, everything, True),
        ),
        (
            f"plain sweep {len(sub)}x{n}",
            lambda b: b.commutator_mask(table, inv, orders, sub, everything, False),
        ),
        (f"conjugacy_min_reps n={n}", lambda b: b.conjugacy_min_reps(table, inv)),
        (f"index_closure n={n}", lambda b: b.index_closure(table, sub[:6])),
    ]

    if not args.quick:
        # workload at the default element-cap scale: order 2000, degree 1000
        dgens = dihedral_gens(1000)
        drows, dtable, dinv, dorders = build_inputs(python_backend, None, dgens)
        dn = len(drows)
        dall = np.arange(dn, dtype=np.int64)
        workloads += [
            (f"mult_table dihedral n={dn}", lambda b: b.mult_table(drows, dgens)),
            (
                f"coprime sweep {dn}x{dn}",
                lambda b: b.commutator_mask(dtable, dinv, dorders, dall, dall, True),
            ),
            (
                f"conjugacy_min_reps n={dn}",
                lambda b: b.conjugacy_min_reps(dtable, dinv),
            ),
        ]

    print(f"{'kernel':34s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, fn in workloads:
        t_py, out_py = best_of(lambda: fn(python_backend))
        t_c, out_c = best_of(lambda: fn(compiled_backend))
        first_py = out_py[0] if isinstance(out_py, tuple) else out_py
        first_c = out_c[0] if isinstance(out_c, tuple) else out_c
        assert np.array_equal(np.asarray(first_py), np.asarray(first_c)), name
        print(f"{name:34s} {t_py:9.4f}s {t_c:9.4f}s {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
