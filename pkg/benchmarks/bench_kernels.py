"""Compare the compiled and pure-Python kernel backends on realistic loads.

Usage::

    python3 benchmarks/bench_kernels.py [--repeats N] [--seed S]

Each kernel gets the same precomputed inputs, so the timings differ only in
the implementation.  The script fails loudly if the two backends disagree on
any output, which doubles as a cheap parity check outside the test suite.
"""

from __future__ import annotations

import argparse
import random
import time

from freeloop._kernels import _pure

try:
    from freeloop._kernels import _fast
except ImportError:
    _fast = None


def make_word_inputs(rng: random.Random, count: int, length: int) -> list[list[int]]:
    # Biased toward adjacent cancellation so reduction actually does work.
    out = []
    for _ in range(count):
        codes: list[int] = []
        while len(codes) < length:
            if codes and rng.random() < 0.45:
                codes.append(-codes[-1])
            else:
                codes.append(rng.choice([-1, 1]) * rng.randint(1, 40))
        out.append(codes)
    return out


def make_graph_inputs(
    rng: random.Random, count: int, vertices: int, edges: int
) -> list[tuple[int, list[int], list[int], list[int]]]:
    out = []
    for _ in range(count):
        src = [rng.randrange(vertices) for _ in range(edges)]
        tgt = [rng.randrange(vertices) for _ in range(edges)]
        out.append((vertices, src, tgt, list(range(edges))))
    return out


def timeit(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=11)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    words = make_word_inputs(rng, count=2000, length=400)
    graphs = make_graph_inputs(rng, count=300, vertices=500, edges=1200)

    backends = {"pure": _pure}
    if _fast is not None:
        backends["fast"] = _fast
    else:
        print("compiled backend not built; benchmarking pure only")

    cases = {
        "reduce_signed (2000 words of 400 letters)": lambda impl: [
            impl.reduce_signed(w) for w in words
        ],
        "union_find_labels (300 graphs, 500v/1200e)": lambda impl: [
            impl.union_find_labels(n, src, tgt) for n, src, tgt, _ in graphs
        ],
        "greedy_forest (300 graphs, 500v/1200e)": lambda impl: [
            impl.greedy_forest(n, src, tgt, order) for n, src, tgt, order in graphs
        ],
    }

    width = max(len(name) for name in cases)
    for name, runner in cases.items():
        results = {}
        timings = {}
        for label, impl in backends.items():
            timings[label] = timeit(lambda impl=impl: runner(impl), args.repeats)
            results[label] = runner(impl)
        if len(results) == 2 and results["pure"] != results["fast"]:
            raise SystemExit(f"backend mismatch in {name}")
        line = f"{name:<{width}}"
        for label in ("pure", "fast"):
            if label in timings:
                line += f"  {label}: {timings[label] * 1000:8.1f} ms"
        if len(timings) == 2:
            line += f"  speedup: {timings['pure'] / timings['fast']:.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
