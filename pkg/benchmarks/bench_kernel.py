"""Compare the compiled and pure Python term-map kernels.

    python benchmarks/bench_kernel.py --r 7 --repeats 3

Two measurements.  The first times hook_weight_sum under each backend,
which is what the verify sweeps actually spend their time in; caches
are cleared before every run so each timing covers the full fold.  The
second multiplies synthetic random term maps through the raw kernel,
isolating multiplication from enumeration overhead.  Best-of-N wall
times are reported, since the minimum is the least noisy statistic for
a deterministic workload.
"""

import argparse
import random
import time

from hooklab import _backend
from hooklab import hookformula


def _clear_caches() -> None:
    hookformula.tree_weight_sum.cache_clear()
    hookformula.cayley_fiber_sums.cache_clear()


def bench_weight_sum(r: int, repeats: int) -> list:
    rows = []
    for name in _backend.available_backends():
        _backend.use_backend(name)
        best = float("inf")
        for _ in range(repeats):
            _clear_caches()
            t0 = time.perf_counter()
            lhs = hookformula.hook_weight_sum(r)
            best = min(best, time.perf_counter() - t0)
        assert lhs == hookformula.hook_weight_closed_form(r)
        rows.append((name, best))
    return rows


def random_terms(rng: random.Random, nvars: int, nterms: int) -> dict:
    out = {}
    nterms = min(nterms, 3**nvars)  # only that many distinct exponent tuples exist
    while len(out) < nterms:
        exps = tuple(rng.randrange(3) for _ in range(nvars))
        out[exps] = rng.randint(1, 9)
    return out


def bench_mul(nvars: int, nterms: int, repeats: int) -> list:
    rng = random.Random(2718)
    a = random_terms(rng, nvars, nterms)
    b = random_terms(rng, nvars, nterms)
    rows = []
    reference = None
    for name in _backend.available_backends():
        _backend.use_backend(name)
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            for _ in range(20):
                product = _backend.mul_terms(a, b)
            best = min(best, (time.perf_counter() - t0) / 20)
        if reference is None:
            reference = product
        assert product == reference, f"backend {name} disagrees on the product"
        rows.append((name, best))
    return rows


def _report(title: str, rows: list) -> None:
    print(title)
    baseline = dict(rows).get("pure")
    for name, seconds in rows:
        speedup = ""
        if baseline is not None and name != "pure" and seconds > 0:
            speedup = f"  ({baseline / seconds:.1f}x vs pure)"
        print(f"  {name:<9} {seconds * 1000:9.2f} ms{speedup}")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--r", type=int, default=7, help="tree size for the sum bench")
    parser.add_argument("--nterms", type=int, default=400, help="operand size for the raw bench")
    parser.add_argument("--repeats", type=int, default=3, help="best-of-N repeats")
    args = parser.parse_args()

    initial = _backend.backend_name()
    try:
        _report(
            f"hook_weight_sum(r={args.r}), cold caches, best of {args.repeats}:",
            bench_weight_sum(args.r, args.repeats),
        )
        _report(
            f"mul_terms on random {args.nterms}-term operands in {args.r} vars:",
            bench_mul(args.r, args.nterms, args.repeats),
        )
    finally:
        _backend.use_backend(initial)


if __name__ == "__main__":
    main()
