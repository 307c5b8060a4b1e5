"""Compiled and pure-Python kernels must agree exactly: same status, same
witness vertices and colors, same node counts. Any divergence means the
candidate ordering or augmenting order drifted."""
import random

import pytest

from rainbowpan import _kernel_py

_kernel = pytest.importorskip("rainbowpan._kernel")


def random_dense(seed: str):
    rng = random.Random(seed)
    n = rng.randint(4, 9)
    m = rng.randint(2, min(6, n))
    vmask = (1 << n) - 1
    if rng.random() < 0.3:
        vmask &= ~(1 << rng.randrange(n))
    p = rng.uniform(0.25, 0.8)
    adj = [0] * (m * n)
    for c in range(m):
        for u in range(n):
            for v in range(u + 1, n):
                alive = (vmask >> u) & (vmask >> v) & 1
                if alive and rng.random() < p:
                    adj[c * n + u] |= 1 << v
                    adj[c * n + v] |= 1 << u
    return n, m, adj, vmask


def survivors(vmask):
    return [v for v in range(64) if (vmask >> v) & 1]


class TestPathParity:
    def test_statuses_witnesses_nodes_agree(self):
        for seed in range(60):
            n, m, adj, vmask = random_dense(f"pp:{seed}")
            alive = survivors(vmask)
            rng = random.Random(f"pp:q:{seed}")
            for _ in range(6):
                x, y = rng.sample(alive, 2)
                k = rng.randint(2, min(len(alive), m + 1))
                a = _kernel_py.find_path(n, m, adj, x, y, k, vmask, 10**9)
                b = _kernel.find_path(n, m, adj, x, y, k, vmask, 10**9)
                assert a == b, (seed, x, y, k)

    def test_budget_cutoffs_agree(self):
        for seed in range(20):
            n, m, adj, vmask = random_dense(f"pb:{seed}")
            alive = survivors(vmask)
            x, y = alive[0], alive[-1]
            k = min(len(alive), m + 1)
            for limit in (1, 2, 5, 17):
                a = _kernel_py.find_path(n, m, adj, x, y, k, vmask, limit)
                b = _kernel.find_path(n, m, adj, x, y, k, vmask, limit)
                assert a == b, (seed, limit)


class TestCycleParity:
    def test_statuses_witnesses_nodes_agree(self):
        for seed in range(60):
            n, m, adj, vmask = random_dense(f"cp:{seed}")
            top = min(len(survivors(vmask)), m)
            for length in range(3, top + 1):
                a = _kernel_py.find_cycle(n, m, adj, length, vmask, 10**9)
                b = _kernel.find_cycle(n, m, adj, length, vmask, 10**9)
                assert a == b, (seed, length)

    def test_budget_cutoffs_agree(self):
        for seed in range(20):
            n, m, adj, vmask = random_dense(f"cb:{seed}")
            top = min(len(survivors(vmask)), m)
            if top < 3:
                continue
            for limit in (1, 2, 5, 17):
                a = _kernel_py.find_cycle(n, m, adj, top, vmask, limit)
                b = _kernel.find_cycle(n, m, adj, top, vmask, limit)
                assert a == b, (seed, limit)


class TestWideMasks:
    """n = 64 exercises full-width masks in the compiled kernel."""

    def test_path_at_word_boundary(self):
        n, m = 64, 2
        adj = [0] * (m * n)

        def add(c, u, v):
            adj[c * n + u] |= 1 << v
            adj[c * n + v] |= 1 << u

        add(0, 0, 63)
        add(1, 63, 32)
        vmask = (1 << 64) - 1
        a = _kernel_py.find_path(n, m, adj, 0, 32, 3, vmask, 10**6)
        b = _kernel.find_path(n, m, adj, 0, 32, 3, vmask, 10**6)
        assert a == b
        assert a[0] == _kernel_py.FOUND and a[1] == [0, 63, 32]

    def test_cycle_in_top_bits(self):
        n, m = 64, 3
        adj = [0] * (m * n)

        def add(c, u, v):
            adj[c * n + u] |= 1 << v
            adj[c * n + v] |= 1 << u

        for c in range(3):
            add(c, 61, 62)
            add(c, 62, 63)
            add(c, 61, 63)
        vmask = (1 << 64) - 1
        a = _kernel_py.find_cycle(n, m, adj, 3, vmask, 10**6)
        b = _kernel.find_cycle(n, m, adj, 3, vmask, 10**6)
        assert a == b
        assert a[0] == _kernel_py.FOUND and a[1] == [61, 62, 63]
