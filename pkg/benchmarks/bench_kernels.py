"""Compare the compiled and numpy kernel backends.

Times the hot kernels on fixed inputs, then the end-to-end pipeline
(ideal lattice, both graphs, all theorem checks) over a corpus, once per
backend in a fresh interpreter so the import-time selection is exercised.

    python benchmarks/bench_kernels.py [--max-order 24] [--repeat 5]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import timeit

import numpy as np

from annigraph import cyclic_ring, product_ring
from annigraph.kernels import available_backends


def kernel_cases():
    ring = product_ring(cyclic_ring(8), cyclic_ring(12))  # order 96
    rng = np.random.default_rng(0)
    a = np.unique(rng.integers(0, ring.order, 30)).astype(np.int32)
    b = np.unique(rng.integers(0, ring.order, 30)).astype(np.int32)
    adj = rng.random((60, 60)) < 0.1
    adj = np.triu(adj, 1)
    adj = (adj | adj.T).astype(np.uint8)
    return {
        "axiom_violation(n=96)": lambda k: k.axiom_violation(ring.add, ring.mul),
        "prodset": lambda k: k.prodset(ring.mul, a, b),
        "additive_closure": lambda k: k.additive_closure(ring.add, a, ring.zero),
        "annihilator": lambda k: k.annihilator(ring.mul, a, ring.zero),
        "ai_witness": lambda k: k.ai_witness(ring.mul, ring.zero, a, b, a),
        "nilpotent_elements": lambda k: k.nilpotent_elements(ring.mul, ring.zero),
        "bfs_distances(v=60)": lambda k: k.bfs_distances(adj),
        "girth(v=60)": lambda k: k.girth(adj),
    }


PIPELINE = """
import time, json
from annigraph import BACKEND
from annigraph.corpus import CorpusConfig, generate_corpus
from annigraph.verify import run_corpus
t = time.perf_counter()
summary = run_corpus(generate_corpus(CorpusConfig({m})))
print(json.dumps({{"backend": BACKEND, "rings": len(summary.labels), "ok": summary.ok,
                  "seconds": time.perf_counter() - t}}))
"""


def pipeline(max_order: int, pure: bool) -> dict:
    env = {**os.environ, "ANNIGRAPH_PURE_PYTHON": "1" if pure else ""}
    out = subprocess.run([sys.executable, "-c", PIPELINE.format(m=max_order)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=24)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print(f"{'kernel':<24}" + "".join(f"{n + ' (ms)':>16}" for n in names) + f"{'speedup':>10}")
    for label, fn in kernel_cases().items():
        row = {}
        for name in names:
            mod = backends[name]
            number = 3
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat))
            row[name] = 1000 * best / number
        speed = f"{row['python'] / row['cython']:.1f}x" if "cython" in row else "-"
        print(f"{label:<24}" + "".join(f"{row[n]:>16.3f}" for n in names) + f"{speed:>10}")

    print()
    results = [pipeline(args.max_order, pure=True)]
    if "cython" in backends:
        results.append(pipeline(args.max_order, pure=False))
    for r in results:
        print(f"corpus <= {args.max_order}: backend={r['backend']:<7} rings={r['rings']} "
              f"ok={r['ok']} {r['seconds']:.2f}s")


if __name__ == "__main__":
    main()
