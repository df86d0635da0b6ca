"""Timing comparison of the pure and compiled scan kernels.

Runs the full subquadrangle scan and the per-subquadrangle ovoid scan
under both backends, checks the outputs agree exactly, and prints a
small table.  Usage:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from srg216._kernels import HAVE_COMPILED, get_backend
from srg216.hermitian import HermitianSurface
from srg216.ovoids import _comb_masks
from srg216.projective import ProjectiveSpace
from srg216.subquadrangles import enumerate_subquadrangles, kernel_inputs


def time_best(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        if best is None or dt < best[0]:
            best = (dt, out)
    return best


def bench_baer_scan(surface, backend, repeat):
    kern = get_backend(backend)
    reps, lidx, smul2, smul3 = kernel_inputs(surface)
    order = tuple(range(45))
    return time_best(
        lambda: kern.scan_baer_closures(reps, lidx, smul2, smul3, order, 0, 45),
        repeat,
    )


def bench_ovoid_scan(surface, backend, repeat):
    kern = get_backend(backend)
    subs = enumerate_subquadrangles(surface, backend=backend)
    combs = _comb_masks()
    gen_mask_sets = []
    for w in subs:
        pos = {p: i for i, p in enumerate(w.points)}
        gen_mask_sets.append(
            tuple(sum(1 << pos[p] for p in sec) for _, sec in w.generators)
        )

    def run():
        out = []
        for gm in gen_mask_sets:
            out.append(tuple(kern.scan_ovoid_masks(gm, combs)))
        return tuple(out)

    return time_best(run, repeat)


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per measurement, best is kept")
    args = parser.parse_args()

    space = ProjectiveSpace()
    surface = HermitianSurface(space)

    backends = ["pure"]
    if HAVE_COMPILED:
        backends.append("compiled")
    else:
        print("compiled kernel not built, timing pure backend only")

    rows = []
    results = {}
    for kernel, bench in (
        ("baer scan", bench_baer_scan),
        ("ovoid scan", bench_ovoid_scan),
    ):
        for backend in backends:
            dt, out = bench(surface, backend, args.repeat)
            rows.append((kernel, backend, dt))
            results[(kernel, backend)] = out

    if HAVE_COMPILED:
        for kernel in ("baer scan", "ovoid scan"):
            if results[(kernel, "pure")] != results[(kernel, "compiled")]:
                raise SystemExit("backends disagree on %s" % kernel)
        print("backends agree exactly on both kernels")

    print()
    print("%-12s %-10s %10s" % ("kernel", "backend", "best (ms)"))
    for kernel, backend, dt in rows:
        print("%-12s %-10s %10.2f" % (kernel, backend, dt * 1000))
    if HAVE_COMPILED:
        for kernel in ("baer scan", "ovoid scan"):
            tp = next(dt for k, b, dt in rows if k == kernel and b == "pure")
            tc = next(dt for k, b, dt in rows if k == kernel and b == "compiled")
            print("%-12s speedup %.1fx" % (kernel, tp / tc))


if __name__ == "__main__":
    main()
