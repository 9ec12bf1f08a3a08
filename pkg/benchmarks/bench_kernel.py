"""Compiled vs pure-Python sparse product, plus two end-to-end workloads.

    python3 benchmarks/bench_kernel.py [--repeat N]

The end-to-end timings use whichever kernel ``affinejt`` picked at import
(set AFFINEJT_PURE=1 to force the fallback).
"""

from __future__ import annotations

import argparse
import random
import time

import affinejt
from affinejt import _kernel_py
from affinejt import exactalg
from affinejt.afftrudi import affine_jt_gl
from affinejt.qtseries import rr_product_side, rr_sum_side
from affinejt.symfun import sym_varset


def random_poly(vs, terms, deg, rng):
    out = {}
    for _ in range(terms):
        exps = [rng.randint(0, deg) for _ in vs.names]
        k = vs.pack(exps)
        out[k] = out.get(k, 0) + rng.randint(-9, 9)
    return {k: c for k, c in out.items() if c}


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(20260101)
    vs = sym_varset(4)
    print(f"kernel in use: {affinejt.KERNEL}")
    for terms in (50, 200, 800):
        a = random_poly(vs, terms, 6, rng)
        b = random_poly(vs, terms, 6, rng)
        py = best_of(lambda: _kernel_py.mul(a, b, vs.bias), args.repeat)
        line = f"mul {terms:4d}x{terms:<4d} python {py * 1e3:8.2f} ms"
        if affinejt.KERNEL == "compiled":
            c = best_of(lambda: exactalg._kernel.mul(a, b, vs.bias), args.repeat)
            assert exactalg._kernel.mul(a, b, vs.bias) == _kernel_py.mul(a, b, vs.bias)
            line += f"  compiled {c * 1e3:8.2f} ms  speedup {py / c:5.1f}x"
        print(line)
    t = best_of(lambda: affine_jt_gl(3, 3, 5, sym_varset(5), method="enumerate"), 1)
    print(f"affine_jt_gl(3,3,5) lattice points  {t:7.2f} s")
    t = best_of(lambda: rr_sum_side("T18", 2, 1, 12) == rr_product_side("T18", 2, 1, 12), 1)
    print(f"T18 k=2 sigma=1 to q^12 both sides {t:7.2f} s")


if __name__ == "__main__":
    main()
