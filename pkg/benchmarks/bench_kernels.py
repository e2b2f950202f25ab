"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends must agree on every result; timings are best-of-N wall clock.
"""

import argparse
import time

import numpy as np

from heptads import _pykernels
from heptads.gf2 import BitMatrix
from heptads.mermin import _edge_index
from heptads.spgroup import D_ALPHA, D_BETA, D_GAMMA, _row_table

try:
    from heptads import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(quick):
    ident = BitMatrix.identity(6).pack()
    g2 = [_row_table(D_ALPHA), _row_table(D_GAMMA)]
    yield "closure <D(a),D(g)> (12096)", lambda k: k.closure(g2, 6, ident), lambda r: np.sort(r)
    if not quick:
        sp6 = [_row_table(D_ALPHA), _row_table(D_BETA)]
        yield "closure <D(a),D(b)> (1451520)", lambda k: k.closure(sp6, 6, ident), lambda r: np.sort(r)
    _, masks, indptr, indices = _edge_index()
    n = len(masks)
    yield "pentagram search (945 edges)", (
        lambda k: k.pentagram_search(masks, indptr, indices, 0, n)
    ), lambda r: r[np.lexsort(r.T[::-1])]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the full Sp(6,2) closure")
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not available; only the Python backend can run")
    print(f"{'case':34s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, run, canon in cases(args.quick):
        tp, rp = best_of(lambda: run(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:34s} {tp:10.3f} {'-':>10s} {'-':>8s}")
            continue
        tc, rc = best_of(lambda: run(_ckernels), args.repeat)
        if not np.array_equal(canon(rp), canon(rc)):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:34s} {tp:10.3f} {tc:10.3f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
