"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Workloads are the ones the library actually runs: automorphism and
isomorphism search on Smarandache holomorphs, autotopism enumeration at the
order-6 bound, and the associativity scan.
"""

from __future__ import annotations

import argparse
import random
import timeit

from sisotopy._kernels import BACKENDS
from sisotopy.holomorph import build_holomorph
from sisotopy.morphisms import Isotopism, apply_isotopism
from sisotopy.perm import Perm
from sisotopy.substructure import make_spair
from sisotopy.sweep import random_latin_square
from sisotopy.tables import cyclic_group, direct_product, symmetric_group


def workloads():
    rng = random.Random(5)
    pair = make_spair(direct_product(cyclic_group(2), cyclic_group(4)), (0, 4))
    hol = build_holomorph(pair.table, "smarandache", pair).table
    images = list(range(hol.order))
    rng.shuffle(images)
    phi = Perm(tuple(images))
    hol_copy = apply_isotopism(hol, Isotopism(phi, phi, phi))
    q6 = random_latin_square(6, rng)
    s4 = symmetric_group(4)
    big = cyclic_group(40)
    return [
        (f"automorphisms S4 (n={s4.order})", "hom_search", (s4.flat, s4.flat, s4.order)),
        (f"isomorphism holomorph (n={hol.order})", "hom_search",
         (hol.flat, hol_copy.flat, hol.order, None, None, 1)),
        ("autotopisms random Latin square (n=6)", "autotopisms", (q6.flat, 6)),
        (f"associativity scan Z40 (n={big.order})", "first_nonassociative", (big.flat, big.order)),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = sorted(BACKENDS)
    if "cython" not in BACKENDS:
        print("compiled kernels not built; timing the Python backend only")
    header = f"{'workload':<42}" + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, fn, call_args in workloads():
        results = {}
        times = {}
        for name in names:
            func = getattr(BACKENDS[name], fn)
            results[name] = func(*call_args)
            number = 1
            times[name] = min(timeit.repeat(lambda: func(*call_args), number=number, repeat=args.repeat))
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:<42}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
