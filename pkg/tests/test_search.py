import random

import pytest
from hypothesis import given

from rainbowpan.core import (
    GraphCollection,
    build_graph,
    restrict,
    verify_colored_path,
)
from rainbowpan.search import (
    BudgetExceeded,
    SearchBudget,
    assign_colors,
    default_budget,
    find_rainbow_cycle,
    find_rainbow_ham_path,
    find_rainbow_path,
    rainbow_distance,
)
from . import oracles
from .strategies import collections


def random_collection(seed: str, max_n: int = 6, max_m: int = 4, p: float = 0.5):
    rng = random.Random(seed)
    n = rng.randint(4, max_n)
    m = rng.randint(2, max_m)
    graphs = []
    for _ in range(m):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        graphs.append(build_graph(n, edges))
    return GraphCollection(n, tuple(graphs))


class TestPathAgainstOracle:
    def test_existence_matches_exhaustive_enumeration(self):
        for seed in range(30):
            coll = random_collection(f"path:{seed}")
            k_top = min(coll.n, coll.m + 1)
            for x in range(coll.n):
                for y in range(x + 1, coll.n):
                    for k in range(2, k_top + 1):
                        got = find_rainbow_path(coll, x, y, k)
                        expect = oracles.rainbow_path_exists(coll, x, y, k)
                        assert (got is not None) == expect, (seed, x, y, k)
                        if got is not None:
                            assert got.vertices[0] == x and got.vertices[-1] == y
                            assert got.k == k

    def test_forbidden_colors_respected(self):
        for seed in range(12):
            coll = random_collection(f"forbid:{seed}")
            banned = {coll.m - 1}
            k_top = min(coll.n, coll.m)  # one fewer usable color
            for x in range(coll.n):
                for y in range(x + 1, coll.n):
                    for k in range(2, k_top + 1):
                        got = find_rainbow_path(coll, x, y, k, forbidden_colors=banned)
                        expect = oracles.rainbow_path_exists(coll, x, y, k, banned)
                        assert (got is not None) == expect
                        if got is not None:
                            assert banned.isdisjoint(got.colors)

    def test_repeated_query_returns_identical_witness(self):
        coll = random_collection("det:0", max_n=6)
        first = find_rainbow_path(coll, 0, 1, 4)
        second = find_rainbow_path(coll, 0, 1, 4)
        assert first == second


class TestAssignColors:
    def test_matches_exhaustive_assignment(self):
        for seed in range(40):
            rng = random.Random(f"assign:{seed}")
            coll = random_collection(f"assign:{seed}", p=0.6)
            length = rng.randint(2, coll.n)
            vertices = rng.sample(range(coll.n), length)
            options = oracles.edge_color_options(coll, vertices)
            if any(not opts for opts in options):
                with pytest.raises(ValueError, match="not an edge"):
                    assign_colors(coll, vertices)
                continue
            got = assign_colors(coll, vertices)
            expect = oracles.exhaustive_assignment(coll, vertices)
            assert (got is None) == (expect is None), (seed, vertices)
            if got is not None:
                assert len(set(got)) == len(got)
                for (u, v), c in zip(zip(vertices, vertices[1:]), got):
                    assert coll.has_edge(c, u, v)

    def test_pigeonhole_deficiency_is_none(self):
        # both edges carried only by color 0
        g0 = build_graph(3, [(0, 1), (1, 2)])
        g1 = build_graph(3, [])
        coll = GraphCollection(3, (g0, g1))
        assert assign_colors(coll, [0, 1, 2]) is None

    def test_rejects_union_non_edge_naming_pair(self):
        g = build_graph(3, [(0, 1)])
        coll = GraphCollection(3, (g, g))
        with pytest.raises(ValueError, match=r"\(1, 2\)"):
            assign_colors(coll, [0, 1, 2])

    def test_rejects_repeated_vertices(self):
        coll = random_collection("assign:err")
        with pytest.raises(ValueError):
            assign_colors(coll, [0, 1, 0])

    def test_single_vertex_assigns_nothing(self):
        coll = random_collection("assign:one")
        assert assign_colors(coll, [0]) == ()


class TestTwoVertexPaths:
    @given(collections(min_n=2))
    def test_k2_path_iff_some_color_has_edge(self, coll):
        x, y = 0, 1
        got = find_rainbow_path(coll, x, y, 2)
        expect = any(g.has_edge(x, y) for g in coll.graphs)
        assert (got is not None) == expect


class TestBudget:
    def test_tiny_budget_raises(self):
        kn = build_graph(7, [(u, v) for u in range(7) for v in range(u + 1, 7)])
        coll = GraphCollection(7, (kn,) * 6)
        with pytest.raises(BudgetExceeded) as info:
            find_rainbow_path(coll, 0, 6, 7, budget=SearchBudget(node_limit=1))
        # one node for the root, the second tick trips the limit
        assert info.value.nodes == 2

    def test_budget_env_var(self, monkeypatch):
        monkeypatch.setenv("RAINBOW_BUDGET", "123")
        assert default_budget().node_limit == 123
        monkeypatch.delenv("RAINBOW_BUDGET")
        assert default_budget().node_limit == 50_000_000

    def test_rejects_nonpositive_limit(self):
        with pytest.raises(ValueError):
            SearchBudget(node_limit=0)


class TestRainbowDistance:
    def test_matches_smallest_oracle_length(self):
        for seed in range(15):
            coll = random_collection(f"dist:{seed}", max_n=5, max_m=3)
            k_top = min(coll.n, coll.m + 1)
            for x in range(coll.n):
                for y in range(x + 1, coll.n):
                    expect = None
                    for k in range(2, k_top + 1):
                        if oracles.rainbow_path_exists(coll, x, y, k):
                            expect = k - 1
                            break
                    assert rainbow_distance(coll, x, y) == expect

    def test_same_vertex_distance_zero(self):
        coll = random_collection("dist:self")
        assert rainbow_distance(coll, 2, 2) == 0

    def test_unreachable_vertex(self):
        g = build_graph(3, [(0, 1)])
        coll = GraphCollection(3, (g, g))
        assert rainbow_distance(coll, 0, 2) is None

    def test_symmetry(self):
        for seed in range(8):
            coll = random_collection(f"dist:sym:{seed}")
            for x in range(coll.n):
                for y in range(x + 1, coll.n):
                    assert rainbow_distance(coll, x, y) == rainbow_distance(
                        coll, y, x
                    )

    def test_at_least_union_distance_with_equality_when_assignable(self):
        for seed in range(12):
            coll = random_collection(f"dist:lb:{seed}")
            nbr = oracles.neighbor_sets(coll)
            for x in range(coll.n):
                for y in range(x + 1, coll.n):
                    base = _union_distance(nbr, x, y)
                    got = rainbow_distance(coll, x, y)
                    if base is None:
                        assert got is None
                        continue
                    assert got is None or got >= base
                    shortest = [
                        p
                        for p in oracles.all_simple_paths(coll, x, y, base)
                        if len(p) == base + 1
                    ]
                    if any(
                        oracles.exhaustive_assignment(coll, p) is not None
                        for p in shortest
                    ):
                        assert got == base


def _union_distance(nbr, x, y):
    dist = {x: 0}
    frontier = [x]
    while frontier:
        nxt = []
        for u in frontier:
            for v in nbr[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist.get(y)


class TestMonotonicity:
    def test_adding_edges_never_loses_paths(self):
        hits = 0
        for seed in range(50):
            rng = random.Random(f"mono:{seed}")
            coll = random_collection(f"mono:{seed}", p=0.45)
            x, y = rng.sample(range(coll.n), 2)
            k = rng.randint(2, min(coll.n, coll.m + 1))
            before = find_rainbow_path(coll, x, y, k)
            if before is None:
                continue
            hits += 1
            c = rng.randrange(coll.m)
            non_edges = [
                (u, v)
                for u in range(coll.n)
                for v in range(u + 1, coll.n)
                if not coll.has_edge(c, u, v)
            ]
            if not non_edges:
                continue
            u, v = rng.choice(non_edges)
            grown = GraphCollection(
                coll.n,
                tuple(
                    g.with_edge(u, v) if i == c else g
                    for i, g in enumerate(coll.graphs)
                ),
            )
            assert find_rainbow_path(grown, x, y, k) is not None
        assert hits > 10  # the sweep must actually exercise the property


class TestCycles:
    def test_existence_matches_oracle(self):
        for seed in range(15):
            coll = random_collection(f"cycle:{seed}", max_n=6, max_m=4, p=0.55)
            for length in range(3, min(coll.n, coll.m) + 1):
                got = find_rainbow_cycle(coll, length)
                expect = oracles.rainbow_cycle_exists(coll, length)
                assert (got is not None) == expect, (seed, length)

    def test_witness_is_canonical(self):
        for seed in range(20):
            coll = random_collection(f"cycle:canon:{seed}", p=0.7)
            for length in range(3, min(coll.n, coll.m) + 1):
                got = find_rainbow_cycle(coll, length)
                if got is not None:
                    vs = got.vertices
                    assert vs[0] == min(vs)
                    assert vs[1] < vs[-1]

    def test_length_above_vertex_count_is_none(self):
        kn = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        coll = GraphCollection(4, (kn,) * 5)
        assert find_rainbow_cycle(coll, 5) is None

    def test_length_above_color_count_rejected(self):
        kn = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        coll = GraphCollection(5, (kn,) * 3)
        with pytest.raises(ValueError):
            find_rainbow_cycle(coll, 4)


class TestViewsAndValidation:
    def test_ham_path_spans_surviving_vertices(self):
        kn = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        coll = GraphCollection(5, (kn,) * 4)
        view = restrict(coll, remove_vertices=[4])
        path = find_rainbow_ham_path(view, 0, 3)
        assert path is not None and path.k == 4
        assert 4 not in path.vertices
        assert verify_colored_path(view, path)

    def test_rejects_equal_endpoints(self):
        coll = random_collection("val:0")
        with pytest.raises(ValueError):
            find_rainbow_path(coll, 1, 1, 3)

    def test_rejects_k_out_of_range(self):
        coll = random_collection("val:1")
        with pytest.raises(ValueError):
            find_rainbow_path(coll, 0, 1, 1)
        with pytest.raises(ValueError):
            find_rainbow_path(coll, 0, 1, coll.n + 1)

    def test_rejects_k_beyond_colors(self):
        g = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
        coll = GraphCollection(5, (g, g))
        with pytest.raises(ValueError):
            find_rainbow_path(coll, 0, 1, 4)  # 3 edges, 2 colors

    def test_rejects_removed_endpoint(self):
        coll = random_collection("val:2")
        view = restrict(coll, remove_vertices=[0])
        with pytest.raises(ValueError):
            find_rainbow_path(view, 0, 1, 2)

    @given(collections(min_n=2))
    def test_every_collection_edge_yields_its_two_path(self, coll):
        for c in range(coll.m):
            for u, v in coll[c].edges():
                path = find_rainbow_path(coll, u, v, 2)
                assert path is not None
