"""Compare the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from threecolor import _pykernels
from threecolor.colorer import degeneracy_order
from threecolor.graph import Graph
from threecolor.harness import CorpusSpec, enumerate_graphs
from threecolor.named import dodecahedron, grotzsch, mycielski

try:
    from threecolor import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def workloads():
    rng = random.Random(1)
    decide = [grotzsch(), mycielski(grotzsch()), dodecahedron()]
    decide += [random_graph(rng, 40, 0.12) for _ in range(20)]
    count = [dodecahedron(), random_graph(rng, 14, 0.25), random_graph(rng, 16, 0.3)]
    canon = list(enumerate_graphs(CorpusSpec(7)))
    return decide, count, canon


def run(kernels, decide, count, canon) -> dict[str, float]:
    out = {}
    t = time.perf_counter()
    for g in decide:
        for k in (3, 4):
            kernels.find_coloring(g.masks, k, degeneracy_order(g), [-1] * g.n, True)
    out["find_coloring"] = time.perf_counter() - t
    t = time.perf_counter()
    for g in count:
        kernels.all_colorings(g.masks, 3, degeneracy_order(g), [-1] * g.n, 3**16)
    out["all_colorings"] = time.perf_counter() - t
    t = time.perf_counter()
    for g in canon:
        kernels.canonical_order(g.n, g.masks)
    out["canonical_order"] = time.perf_counter() - t
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    data = workloads()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    best: dict[str, dict[str, float]] = {}
    for name, mod in backends:
        runs = [run(mod, *data) for _ in range(args.repeat)]
        best[name] = {k: min(r[k] for r in runs) for k in runs[0]}
    print(f"{'kernel':<18}" + "".join(f"{n:>12}" for n, _ in backends) + "     speedup")
    for k in best["python"]:
        row = f"{k:<18}" + "".join(f"{best[n][k]:>11.4f}s" for n, _ in backends)
        if "cython" in best:
            row += f"{best['python'][k] / best['cython'][k]:>11.1f}x"
        print(row)
    if _ckernels is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
