"""Branch builders on engineered fixtures with frozen case tags.

Each fixture from gen_lemma_shape plants exactly the attachment structure
one branch needs, so the expected (case, subcase) labels are known constants;
a builder drifting to a different branch is a regression even when the path
it emits is still valid.
"""
import pytest

from rainbowpan.analysis import ExtremalWitness
from rainbowpan.constructions import (
    HypothesisViolation,
    construct_short_paths,
    constructive_panconnect,
    endpoint_bound_report,
    five_vertex_4path,
    ham_path_k_path,
    join_partition_k_path,
    near_cycle_k_path,
    rotation_k_path,
    two_clique_k_path,
)
from rainbowpan.core import GraphCollection, build_graph, verify_colored_path
from rainbowpan.generate import (
    gen_extremal_F,
    gen_lemma_shape,
    gen_random_collection,
)

from .oracles import rainbow_path_exists


def complete_collection(n: int, m: int) -> GraphCollection:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return GraphCollection(n, tuple(build_graph(n, edges) for _ in range(m)))


def check_path(coll, path, x, y, k):
    assert len(path.vertices) == k
    assert {path.vertices[0], path.vertices[-1]} == {x, y}
    verify_colored_path(coll, path)


# -- short paths ---------------------------------------------------------------


def test_short_paths_on_complete():
    coll = complete_collection(7, 6)
    one, two = construct_short_paths(coll, 0, 3)
    check_path(coll, one, 0, 3, 2)
    assert one.colors == (0,)  # smallest color wins
    check_path(coll, two, 0, 3, 3)


def test_short_paths_missing_edge():
    coll = gen_extremal_F(7, seed=0)
    # inside the independent half no color has the edge
    from rainbowpan.analysis import recognize_F_family

    q1 = recognize_F_family(coll).partition["q1"]
    one, two = construct_short_paths(coll, q1[0], q1[1])
    assert one is None
    check_path(coll, two, q1[0], q1[1], 3)


# -- the smallest odd order ------------------------------------------------------


def test_five_vertex_4path_all_pairs():
    for seed in range(5):
        coll = gen_random_collection(5, 4, 3, seed=seed)
        for x in range(5):
            for y in range(x + 1, 5):
                path, tag = five_vertex_4path(coll, x, y)
                check_path(coll, path, x, y, 4)
                assert tag


# -- rotation around a spanning cycle ---------------------------------------------


@pytest.mark.parametrize("n", [7, 9])
def test_rotation_all_lengths(n):
    coll, h = gen_lemma_shape("lem2", n, seed=n)
    for k in range(4, n):
        path, sets = rotation_k_path(coll, h["cycle"], h["x"], h["y"], k)
        check_path(coll, path, h["x"], h["y"], k)
        assert sets.c_star == h["c_star"]
        assert sets.j == h["j"]
        assert sets.s in sets.i_k and sets.s in sets.i_0
        # positions are 1-based along the cycle
        length = len(h["cycle"].vertices)
        assert all(1 <= p <= length for p in sets.i_k + sets.i_0)


def test_rotation_rejects_wrong_cycle():
    coll, h = gen_lemma_shape("lem2", 7, seed=1)
    with pytest.raises((HypothesisViolation, ValueError)):
        rotation_k_path(coll, h["cycle"], h["x"], h["z"], 5)


# -- cycle one vertex short of spanning --------------------------------------------


NEAR_CYCLE_K4 = {"main": "main", "b1": "b1", "b2": "b2", "b3": "b3"}


@pytest.mark.parametrize("variant", sorted(NEAR_CYCLE_K4))
def test_near_cycle_k4_subcases(variant):
    coll, h = gen_lemma_shape("lem3", 9, seed=1, variant=variant)
    path, sets = near_cycle_k_path(
        coll, h["cycle"], h["x"], h["y"], h["z"], h["w"], 4
    )
    check_path(coll, path, h["x"], h["y"], 4)
    assert sets.case == "1"
    assert sets.subcase == NEAR_CYCLE_K4[variant]


@pytest.mark.parametrize("variant", ["main", "b1", "b2", "b3"])
def test_near_cycle_longer_lengths_use_anchor_sweep(variant):
    coll, h = gen_lemma_shape("lem3", 9, seed=1, variant=variant)
    for k in range(5, 9):
        path, sets = near_cycle_k_path(
            coll, h["cycle"], h["x"], h["y"], h["z"], h["w"], k
        )
        check_path(coll, path, h["x"], h["y"], k)
        assert sets.case == "2"
        # disjoint attachment sets with the lone excluded position
        assert not set(sets.a) & set(sets.b)
        assert sets.excluded not in sets.a + sets.b


def test_near_cycle_interior_anchor_case():
    coll, h = gen_lemma_shape("lem3", 9, seed=2, variant="case3")
    for k in range(5, 9):
        path, sets = near_cycle_k_path(
            coll, h["cycle"], h["x"], h["y"], h["z"], h["w"], k
        )
        check_path(coll, path, h["x"], h["y"], k)
        assert sets.case == "3"


def test_near_cycle_partition_roles():
    coll, h = gen_lemma_shape("lem3", 9, seed=3, variant="main")
    _, sets = near_cycle_k_path(coll, h["cycle"], h["x"], h["y"], h["z"], h["w"], 6)
    cycle_verts = set(h["cycle"].vertices)
    assert set(sets.u1) | set(sets.u2) == cycle_verts
    assert not set(sets.u1) & set(sets.u2)
    assert sets.w == h["w"]


# -- endpoint degree bounds ----------------------------------------------------------


ENDPOINT_BOUNDS = [
    (7, "lo-lo", 1, 1),
    (9, "lo-lo", 2, 2),
    (9, "lo-hi", 2, 3),
]


@pytest.mark.parametrize("n,variant,d1,d2", ENDPOINT_BOUNDS)
def test_endpoint_bounds_frozen_degrees(n, variant, d1, d2):
    coll, h = gen_lemma_shape("lem5", n, seed=0, variant=variant)
    rep = endpoint_bound_report(coll, h["path"], excluded_color=h["excluded_color"])
    assert (rep.d1, rep.d2) == (d1, d2)
    assert len(rep.i_f1) == d1 and len(rep.i_f2) == d2
    positions = range(1, n - 2)  # 1-based along the n-3 path vertices
    assert all(p in positions for p in rep.i_f1 + rep.i_f2)
    lo, hi = (n - 5) // 2, (n - 3) // 2
    assert {rep.d1, rep.d2} <= {lo, hi}
    assert n - 5 <= rep.d1 + rep.d2 <= n - 4


def test_endpoint_bounds_overlap_is_fatal():
    coll, h = gen_lemma_shape("lem5", 9, seed=0, variant="overlap")
    with pytest.raises(HypothesisViolation) as exc:
        endpoint_bound_report(coll, h["path"], excluded_color=h["excluded_color"])
    assert exc.value.fatal
    assert exc.value.claim == "cycle-free"
    assert "cycle" in exc.value.evidence


# -- spanning path of the reduced view --------------------------------------------


HAM_PATH_TAGS = {
    ("a", 9): {4: ("a", "claim5"), 8: ("a", "full")},
    ("b", 9): {4: ("b", "bridge"), 7: ("b", "long")},
    ("c1", 9): {4: ("c", "3.1:claim5"), 8: ("c", "3.1:full")},
    ("c2", 9): {4: ("c", "3.2:claim5"), 5: ("c", "3.2:z"), 6: ("c", "3.2:mid")},
    ("c2", 7): {4: ("c", "3.2:u2"), 5: ("c", "3.2:z")},
}


@pytest.mark.parametrize("variant,n", sorted(HAM_PATH_TAGS))
def test_ham_path_cases(variant, n):
    coll, h = gen_lemma_shape("lem6", n, seed=2, variant=variant)
    expected = HAM_PATH_TAGS[(variant, n)]
    for k in range(4, n):
        path, sets = ham_path_k_path(coll, h["path"], h["x"], h["y"], h["z"], k)
        check_path(coll, path, h["x"], h["y"], k)
        assert sets.case == h["case"]
        if k in expected:
            assert (sets.case, sets.subcase) == expected[k], k


def test_ham_path_recolor_redispatch():
    # the planted frame only completes after re-rooting on recolored ends
    coll, h = gen_lemma_shape("lem6", 9, seed=2, variant="c2rec")
    for k in range(4, 9):
        path, sets = ham_path_k_path(coll, h["path"], h["x"], h["y"], h["z"], k)
        check_path(coll, path, h["x"], h["y"], k)
        assert sets.subcase.startswith("3.2->rec:")


def test_ham_path_block_structure():
    coll, h = gen_lemma_shape("lem6", 9, seed=5, variant="a")
    _, sets = ham_path_k_path(coll, h["path"], h["x"], h["y"], h["z"], 6)
    # blocks tile a1 exactly
    from_blocks = [p for s, t in sets.blocks for p in range(s, t + 1)]
    assert tuple(sorted(sets.a1)) == tuple(sorted(from_blocks))
    assert sets.l == len(sets.blocks)


# -- two-clique collections -----------------------------------------------------------


TWO_CLIQUE_TAGS = {
    ("z", 7): {4: "straight", 5: "z-mid", 6: "z-full"},
    ("z", 9): {4: "straight", 6: "z-mid", 7: "z-full", 8: "z-full"},
    ("cross", 7): {4: "straight", 5: "cross", 6: "cross"},
    ("cross", 9): {5: "straight", 6: "cross", 8: "cross"},
}


@pytest.mark.parametrize("variant,n", sorted(TWO_CLIQUE_TAGS))
def test_two_clique_routes(variant, n):
    coll, h = gen_lemma_shape("lem7", n, seed=3, variant=variant)
    expected = TWO_CLIQUE_TAGS[(variant, n)]
    for k in range(4, n):
        path, tag = two_clique_k_path(
            coll, h["u1"], h["u2"], h["x"], h["y"], h["z"], h["j"], k
        )
        check_path(coll, path, h["x"], h["y"], k)
        if k in expected:
            assert tag == expected[k], k


# -- join partitions -------------------------------------------------------------------


def test_join_partition_witness_route():
    coll, h = gen_lemma_shape("lem8", 9, seed=4, variant="witness")
    for k in range(4, 9):
        path, tag = join_partition_k_path(
            coll, h["f"], h["i"], h["x"], h["y"], h["z"], k
        )
        check_path(coll, path, h["x"], h["y"], k)
        assert tag == "2.1"


def test_join_partition_inner_route():
    coll, h = gen_lemma_shape("lem8", 9, seed=4, variant="inner")
    for k in range(4, 9):
        path, tag = join_partition_k_path(
            coll, h["f"], h["i"], h["x"], h["y"], h["z"], k
        )
        check_path(coll, path, h["x"], h["y"], k)
        assert tag == "1"


def test_join_partition_family_verdict():
    # both routes must agree: the builder's structural verdict and the
    # exhaustive search both say the 4-path is missing
    coll, h = gen_lemma_shape("lem8", 9, seed=4, variant="family")
    f, i, x, y = h["f"], h["i"], h["x"], h["y"]
    verdict, tag = join_partition_k_path(coll, f[1:], i, x, y, f[0], 4)
    assert tag == "2.2"
    assert isinstance(verdict, ExtremalWitness)
    assert verdict.kind == "F_family"
    assert not rainbow_path_exists(coll, x, y, 4)
    # every other length is still reachable
    path, tag = join_partition_k_path(coll, f[1:], i, x, y, f[0], 5)
    check_path(coll, path, x, y, 5)
    assert tag == "2.1"


# -- the full constructive pipeline ------------------------------------------------------


def test_constructive_random_has_no_gaps():
    for seed in (0, 7):
        coll = gen_random_collection(7, 6, 4, seed=seed)
        for x, y in ((0, 1), (2, 5)):
            rep = constructive_panconnect(coll, x, y)
            assert rep.missing_k == ()
            assert not rep.discrepancies
            assert rep.verdict is None
            assert sorted(rep.paths) == list(range(rep.distance + 1, 8))
            for k, path in rep.paths.items():
                check_path(coll, path, x, y, k)
            lemmas = {t.lemma for t in rep.traces}
            assert lemmas <= {
                "short_path",
                "ham_search",
                "five_vertex",
                "universal_endpoint",
                "rotation",
                "near_cycle",
                "ham_path",
                "two_clique",
                "join_partition",
                "search",
            }


def test_constructive_matches_bruteforce_per_length():
    coll = gen_random_collection(7, 6, 4, seed=13)
    rep = constructive_panconnect(coll, 1, 4)
    for k in range(2, 8):
        built = k in rep.paths
        exists = rainbow_path_exists(coll, 1, 4, k)
        if k > rep.distance:
            assert built and exists, k


def test_constructive_route_universal_endpoint():
    rep = constructive_panconnect(complete_collection(7, 6), 0, 1)
    assert "universal_endpoint" in {t.lemma for t in rep.traces}
    assert rep.missing_k == ()


def test_constructive_route_five_vertex():
    rep = constructive_panconnect(gen_random_collection(5, 4, 3, seed=1), 0, 2)
    assert "five_vertex" in {t.lemma for t in rep.traces}
    assert rep.missing_k == ()


def test_constructive_route_two_clique():
    coll, h = gen_lemma_shape("lem7", 7, seed=5, variant="z")
    rep = constructive_panconnect(coll, h["x"], h["y"])
    assert "two_clique" in {t.lemma for t in rep.traces}
    assert rep.missing_k == () and not rep.discrepancies


def test_constructive_route_join_partition():
    coll, h = gen_lemma_shape("lem8", 9, seed=6, variant="witness")
    rep = constructive_panconnect(coll, h["x"], h["y"])
    assert "join_partition" in {t.lemma for t in rep.traces}
    assert rep.missing_k == () and not rep.discrepancies


def test_constructive_family_verdict_on_single_edge_pair():
    coll = gen_extremal_F(7, seed=3)
    from rainbowpan.analysis import recognize_F_family

    sx, sy = recognize_F_family(coll).partition["single_edge"]
    rep = constructive_panconnect(coll, sx, sy)
    assert rep.verdict is not None and rep.verdict.kind == "F_family"
    assert rep.missing_k == (4,)
    assert not rep.discrepancies
    # other lengths are present and valid
    for k, path in rep.paths.items():
        check_path(coll, path, sx, sy, k)


def test_constructive_rejects_out_of_scope():
    with pytest.raises(ValueError):
        constructive_panconnect(complete_collection(6, 5), 0, 1)  # even order
    with pytest.raises(ValueError):
        constructive_panconnect(complete_collection(7, 5), 0, 1)  # wrong m
    sparse = GraphCollection(
        7, tuple(build_graph(7, [(u, (u + 1) % 7) for u in range(7)]) for _ in range(6))
    )
    with pytest.raises(ValueError):
        constructive_panconnect(sparse, 0, 1)  # min degree 2 below threshold


def test_constructive_deterministic():
    import json

    coll = gen_random_collection(9, 8, 5, seed=4)
    a = constructive_panconnect(coll, 0, 3).to_json_dict()
    b = constructive_panconnect(coll, 0, 3).to_json_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
