"""Timing comparison: compiled kernel vs pure-Python twin.

Runs an identical query workload on both and reports wall time, node
throughput, and speedup. Node counts must match exactly; the run aborts if
they do not, since that would mean the kernels diverged.

Usage: python3 benchmarks/bench_kernel.py [--instances 30] [--n 11]
"""
from __future__ import annotations

import argparse
import random
import time

from rainbowpan import _kernel_py

try:
    from rainbowpan import _kernel
except ImportError:
    _kernel = None


def make_workload(n: int, instances: int):
    """Random near-threshold collections with m = n-1 colors, plus the
    queries a panconnectivity sweep would issue against each."""
    work = []
    for idx in range(instances):
        rng = random.Random(f"bench:{n}:{idx}")
        m = n - 1
        adj = [0] * (m * n)
        # sparse end forces exhaustive refutations, the expensive case
        p = rng.uniform(0.18, 0.55)
        for c in range(m):
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.random() < p:
                        adj[c * n + u] |= 1 << v
                        adj[c * n + v] |= 1 << u
        vmask = (1 << n) - 1
        queries = []
        for x in range(min(4, n)):
            for y in range(x + 1, min(4, n)):
                queries.append(("path", x, y, n))
                queries.append(("path", x, y, n - 1))
        queries.append(("cycle", n - 3))
        queries.append(("cycle", n - 2))
        work.append((n, m, adj, vmask, queries))
    return work


def run(kernel, work, limit: int):
    nodes = 0
    found = 0
    t0 = time.perf_counter()
    for n, m, adj, vmask, queries in work:
        for q in queries:
            if q[0] == "path":
                _, x, y, k = q
                status, _, _, used = kernel.find_path(n, m, adj, x, y, k, vmask, limit)
            else:
                status, _, _, used = kernel.find_cycle(n, m, adj, q[1], vmask, limit)
            nodes += used
            found += status == kernel.FOUND
    return time.perf_counter() - t0, nodes, found


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=30)
    ap.add_argument("--n", type=int, default=11)
    ap.add_argument("--limit", type=int, default=50_000_000)
    args = ap.parse_args()

    work = make_workload(args.n, args.instances)
    py_t, py_nodes, py_found = run(_kernel_py, work, args.limit)
    print(f"python   : {py_t:8.3f}s  {py_nodes:>10} nodes  {py_found} hits")
    if _kernel is None:
        print("compiled : unavailable (extension not built)")
        return
    c_t, c_nodes, c_found = run(_kernel, work, args.limit)
    print(f"compiled : {c_t:8.3f}s  {c_nodes:>10} nodes  {c_found} hits")
    if (c_nodes, c_found) != (py_nodes, py_found):
        raise SystemExit("kernel divergence: node counts or results differ")
    print(f"speedup  : {py_t / c_t:8.2f}x")


if __name__ == "__main__":
    main()
