"""Compare the compiled and pure-Python enumeration kernels.

"scan" columns time the raw kernel over all 4**n codes; "enum" columns add
building the Fraction triples and PeriodicTriangle records.

    python3 benchmarks/bench_kernels.py --max-n 9 --repeat 3

The rational column times ``word_to_triangle`` on every admissible word (the
Fraction path the kernels replace); it is skipped above ``--rational-max-n``.
"""
import argparse
import time

from pedalwords import bijection, kernels
from pedalwords.bijection import eta, enumerate_admissible_words, word_to_triangle


def best_of(repeat, f):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        f()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--rational-max-n", type=int, default=6)
    args = ap.parse_args()

    names = sorted(kernels.BACKENDS)
    print(f"backends: {', '.join(names)} (default {kernels.DEFAULT_BACKEND})")
    header = ["n", "triangles"]
    header += [f"scan {b}" for b in names] + [f"enum {b}" for b in names] + ["rational"]
    if "cython" in names:
        header += ["scan speedup", "enum speedup"]
    print("  ".join(f"{h:>12}" for h in header))
    for n in range(args.min_n, args.max_n + 1):
        scan, times = {}, {}
        for b in names:
            scan[b] = best_of(args.repeat, lambda: kernels.scan(n, 0, 4 ** n, b))
            times[b] = best_of(args.repeat, lambda: bijection.enumerate_periodic_triangles(n, backend=b))
        count = len(bijection.enumerate_periodic_triangles(n, backend=names[0]))
        if n <= args.rational_max_n:
            words = enumerate_admissible_words(n)
            rational = f"{best_of(1, lambda: [word_to_triangle(eta(w)) for w in words]):.4f}"
        else:
            rational = "-"
        row = [str(n), str(count)]
        row += [f"{scan[b]:.4f}" for b in names] + [f"{times[b]:.4f}" for b in names] + [rational]
        if "cython" in names:
            row += [f"{scan['python'] / scan['cython']:.1f}x", f"{times['python'] / times['cython']:.1f}x"]
        print("  ".join(f"{c:>12}" for c in row))


if __name__ == "__main__":
    main()
