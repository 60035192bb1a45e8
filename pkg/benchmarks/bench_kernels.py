"""Time the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

import argparse
import json
import random
import statistics
import time
from itertools import combinations_with_replacement
from pathlib import Path

from gindepth import kernels
from gindepth.field import PrimeField
from gindepth.groebner import PolynomialIdeal, buchberger, gin, to_rkey
from gindepth.parse import parse_ideal
from gindepth.polynomial import Polynomial

F = PrimeField()
CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def dense_form(rng, n, d):
    terms = {}
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = rng.randrange(F.characteristic)
    return Polynomial(n, F, terms)


def random_ideal(n, degrees, seed=1):
    rng = random.Random(seed)
    return PolynomialIdeal(n, [dense_form(rng, n, d) for d in degrees], F)


def minimalize_workload():
    rng = random.Random(2)
    sets = [[tuple(rng.randint(0, 4) for _ in range(4)) for _ in range(60)] for _ in range(200)]
    return lambda: [kernels.minimalize(s) for s in sets]


def normal_form_workload():
    # reduce random dense quartics modulo a fixed Groebner basis
    G = buchberger(random_ideal(5, [2, 2, 2]))
    rng = random.Random(3)
    targets = [{to_rkey(e): c for e, c in dense_form(rng, 5, 4).items()} for _ in range(20)]

    def run():
        red = kernels.make_reducer(F)
        for g in G:
            items = [(to_rkey(e), c) for e, c in g.items()]
            red.add(items[0][0], items[1:])
        return [red.normal_form(dict(t)) for t in targets]

    return run


WORKLOADS = {
    "minimalize 200x60 exponent sets": minimalize_workload,
    "normal form 20 quartics, n=5": normal_form_workload,
    "buchberger n=6, degrees 2,2,3,3": lambda: (lambda I=random_ideal(6, [2, 2, 3, 3]): buchberger(I)),
    "buchberger n=7, five quadrics": lambda: (lambda I=random_ideal(7, [2] * 5): buchberger(I)),
    "gin rational quintic": lambda: (
        lambda I=parse_ideal((CORPUS / "quintic.ideal").read_text()).ideal: gin(I)
    ),
}


def time_it(fn, repeat):
    samples = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t)
    return statistics.median(samples)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    backends = kernels.available_backends()
    before = kernels.BACKEND
    rows = []
    for name, make in WORKLOADS.items():
        row = {"workload": name}
        outputs = {}
        for b in backends:
            kernels.set_backend(b)
            fn = make()
            outputs[b] = repr(fn())
            row[b] = time_it(fn, args.repeat)
        kernels.set_backend(before)
        row["same_output"] = len(set(outputs.values())) == 1
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
        return
    if "cython" not in backends:
        print("compiled kernels not built; timing the Python backend only")
    print(f"{'workload':<36}" + "".join(f"{b:>10}" for b in backends) + "   speedup  same")
    for row in rows:
        line = f"{row['workload']:<36}" + "".join(f"{row[b] * 1e3:>8.1f}ms" for b in backends)
        line += f"   {row.get('speedup', float('nan')):>6.1f}x  {'yes' if row['same_output'] else 'NO'}"
        print(line)


if __name__ == "__main__":
    main()
