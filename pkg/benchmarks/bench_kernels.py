"""Benchmark the compiled edit-distance kernels against the pure-Python
fallback on the workloads the resolver actually runs: single distance
calls and the bulk scan behind phonological candidate filtering.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --forms 20000 --repeats 7
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from lexigap._kernels import _pyfallback

try:
    from lexigap._kernels import _speedups
except ImportError:
    _speedups = None


def random_words(rng: random.Random, count: int) -> list[str]:
    alphabet = "abcdefghijlmnoprstuv"
    return ["".join(rng.choice(alphabet)
                    for _ in range(rng.randint(3, 14)))
            for _ in range(count)]


def best_of(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        times.append(time.perf_counter() - started)
    return statistics.median(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=2000,
                        help="single-call pairs per run")
    parser.add_argument("--forms", type=int, default=10000,
                        help="indexed forms for the bulk scan")
    parser.add_argument("--repeats", type=int, default=5,
                        help="runs per measurement (median reported)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    pairs = list(zip(random_words(rng, args.pairs),
                     random_words(rng, args.pairs)))
    forms = random_words(rng, args.forms)
    hint = "abroger"

    impls = [("python", _pyfallback)]
    if _speedups is not None:
        impls.insert(0, ("cython", _speedups))
    else:
        print("compiled extension not built; timing the fallback only")

    for a, b in pairs[:200]:  # both implementations must agree
        got = {name: mod.damerau_levenshtein(a, b) for name, mod in impls}
        assert len(set(got.values())) == 1, (a, b, got)

    results: dict[str, dict[str, float]] = {}
    for name, mod in impls:
        single = best_of(
            lambda m=mod: [m.damerau_levenshtein(a, b) for a, b in pairs],
            args.repeats)
        many = best_of(lambda m=mod: m.damerau_levenshtein_many(hint, forms),
                       args.repeats)
        results[name] = {"single": single, "many": many}

    print(f"{args.pairs} single calls / scan over {args.forms} forms, "
          f"median of {args.repeats} runs")
    print(f"{'impl':<8} {'single (ms)':>12} {'scan (ms)':>12}")
    for name, timing in results.items():
        print(f"{name:<8} {timing['single'] * 1e3:>12.2f} "
              f"{timing['many'] * 1e3:>12.2f}")
    if len(results) == 2:
        for kind in ("single", "many"):
            ratio = results["python"][kind] / results["cython"][kind]
            label = "single calls" if kind == "single" else "bulk scan"
            print(f"cython speedup on {label}: {ratio:.1f}x")


if __name__ == "__main__":
    main()
