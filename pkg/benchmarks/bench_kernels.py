"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]

Both backends get identical inputs and their outputs are compared before
any timing is reported.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import time

import numpy as np

from lpchange import _pykernels

try:
    from lpchange import _kernels
except ImportError:  # extension not built
    _kernels = None


def _random_rules(n: int, count: int, rng: random.Random) -> list[tuple[int, int, int, int]]:
    rules = []
    for _ in range(count):
        parts = [0, 0, 0, 0]
        for atom in rng.sample(range(n), min(n, 4)):
            parts[rng.randrange(4)] |= 1 << atom
        rules.append(tuple(parts))
    return rules


def _cases(rng: random.Random):
    n = 10
    rules = _random_rules(n, 20, rng)
    yield "se_models (10 atoms, 20 rules)", "se_models", (n, rules)
    yield "classical_models (12 atoms, 20 rules)", "classical_models", (12, _random_rules(12, 20, rng))

    w = 6
    universe = [(y << w) | x for y in range(1 << w) for x in range(1 << w) if x & ~y == 0]
    e1 = rng.sample(universe, 300)
    e2 = rng.sample(universe, 300)
    yield "sigma_subset (6 atoms, 300 x 300 pairs)", "sigma_subset", (e1, e2, w)
    yield "sigma_card (6 atoms, 300 x 300 pairs)", "sigma_card", (e1, e2, w)

    rows = np.unique(np.array([[rng.choice(universe) ^ rng.choice(universe) for _ in range(3)] for _ in range(4000)]), axis=0)
    yield f"minimal_rows ({len(rows)} rows of 3 distances)", "minimal_rows", (rows, w)


def _time(fn, args, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t)
    return statistics.median(samples)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    if _kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    rng = random.Random(args.seed)
    results = []
    for label, name, inputs in _cases(rng):
        fast, slow = getattr(_kernels, name), getattr(_pykernels, name)
        if list(fast(*inputs)) != list(slow(*inputs)):
            raise SystemExit(f"backends disagree on {name}")
        tc = _time(fast, inputs, args.repeat)
        tp = _time(slow, inputs, max(1, args.repeat // 2))
        results.append({"case": label, "compiled_s": tc, "python_s": tp, "speedup": tp / tc if tc else float("inf")})

    if args.json:
        print(json.dumps(results, indent=2))
        return
    width = max(len(r["case"]) for r in results)
    print(f"{'case':<{width}}  {'compiled':>10}  {'python':>10}  {'speedup':>8}")
    for r in results:
        print(f"{r['case']:<{width}}  {r['compiled_s'] * 1e3:>8.2f}ms  {r['python_s'] * 1e3:>8.1f}ms  {r['speedup']:>7.1f}x")


if __name__ == "__main__":
    main()
