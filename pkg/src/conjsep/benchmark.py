"""Benchmark the compiled kernels against the pure-Python fallback.

Run as ``python -m conjsep.benchmark``.  Times the three hot kernels (fold,
trace, core scan) on growing instances and prints one table row per case.
"""

import random
import time

from . import _pykernel
from .stallings import SubgroupGraph, build_subgroup_graph, cyclic_core, wedge_arcs
from .words import Word

try:
    from . import _ckernel
except ImportError:
    _ckernel = None


def _random_gens(rng, rank, count, length):
    gens = []
    for _ in range(count):
        codes = []
        for _ in range(length):
            choices = [c for c in range(2 * rank) if not codes or c != codes[-1] ^ 1]
            codes.append(rng.choice(choices))
        gens.append(Word(codes))
    return gens


def _best_of(repeats, fn):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cycle_table(n):
    return [[(v + 1) % n, (v - 1) % n, v, v] for v in range(n)]


def bench_fold(kernel, rng, total_length):
    gens = _random_gens(rng, 2, max(1, total_length // 50), 50)
    n, arcs = wedge_arcs(2, gens)
    return _best_of(3, lambda: kernel.fold_arcs(n, arcs, 4))


def bench_trace(kernel, rng, words):
    gens = _random_gens(rng, 2, 4, 40)
    graph = build_subgroup_graph(2, gens)
    handle = kernel.make_handle(graph.table)
    products = []
    for _ in range(words):
        w = Word()
        for _ in range(6):
            g = rng.choice(gens)
            w = w * (g.inverse() if rng.random() < 0.5 else g)
        products.append(w.letters)

    def run():
        for letters in products:
            assert kernel.trace(handle, 0, letters) == 0

    return _best_of(3, run)


def bench_scan(kernel, n):
    graph = SubgroupGraph.from_table(2, _cycle_table(n))
    core = cyclic_core(graph)
    handle = kernel.make_handle(graph.table)
    core_handle = kernel.make_handle(core.core_table)
    first = (3, 3, 0)  # "b^-1 b^-1 a": loops nowhere, full scan
    others = [(0, 2)]
    return _best_of(3, lambda: kernel.scan_loops(handle, core_handle, core.vertices, first, others))


def main():
    kernels = [("python", _pykernel)]
    if _ckernel is not None:
        kernels.append(("c", _ckernel))
    else:
        print("compiled kernel not built; timing the pure backend only\n")

    cases = []
    for total in (1_000, 10_000, 100_000):
        cases.append((f"fold {total} letters", lambda k, t=total: bench_fold(k, random.Random(1), t)))
    cases.append(("trace 10000 members", lambda k: bench_trace(k, random.Random(2), 10_000)))
    for n in (100, 1_000, 10_000):
        cases.append((f"core scan {n} vertices", lambda k, n=n: bench_scan(k, n)))

    width = max(len(name) for name, _ in cases)
    header = f"{'case':<{width}}  " + "".join(f"{name:>12}" for name, _ in kernels)
    if _ckernel is not None:
        header += f"{'speedup':>10}"
    print(header)
    for name, fn in cases:
        times = [fn(kernel) for _, kernel in kernels]
        row = f"{name:<{width}}  " + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
