"""Independent brute-force oracles used to check the library's answers.

Everything here enumerates exhaustively with no shared code with the package
search internals: simple paths by DFS over explicit neighbor sets, color
assignments by trying every injective mapping. Exponential on purpose; only
run on small instances.
"""
from __future__ import annotations

from itertools import permutations

from rainbowpan.core import CollectionLike, as_view, bits


def neighbor_sets(coll: CollectionLike) -> list[set[int]]:
    """Union-graph neighbor sets over surviving vertices."""
    view = as_view(coll)
    out: list[set[int]] = [set() for _ in range(view.n)]
    for v in view.vertices:
        acc = 0
        for c in view.colors:
            acc |= view.adj_mask(c, v)
        out[v] = set(bits(acc))
    return out


def all_simple_paths(coll: CollectionLike, x: int, y: int, max_edges: int):
    """Yield every simple x..y path with at most max_edges edges, as a tuple."""
    nbr = neighbor_sets(coll)

    def walk(path: list[int], seen: set[int]):
        u = path[-1]
        if u == y:
            yield tuple(path)
            return
        if len(path) > max_edges:
            return
        for v in sorted(nbr[u]):
            if v not in seen:
                path.append(v)
                seen.add(v)
                yield from walk(path, seen)
                path.pop()
                seen.remove(v)

    yield from walk([x], {x})


def edge_color_options(coll: CollectionLike, vertices, forbidden=()) -> list[list[int]]:
    """For each edge of the vertex sequence, the colors containing it."""
    view = as_view(coll)
    banned = set(forbidden)
    out = []
    for u, v in zip(vertices, vertices[1:]):
        out.append(
            [c for c in view.colors if c not in banned and view.has_edge(c, u, v)]
        )
    return out


def exhaustive_assignment(coll: CollectionLike, vertices, forbidden=()):
    """Some injective edge->color assignment found by trying all orders.

    Returns a tuple of colors or None. Tries every permutation-free branch by
    plain backtracking over the option lists.
    """
    options = edge_color_options(coll, vertices, forbidden)
    chosen: list[int] = []
    used: set[int] = set()

    def go(e: int) -> bool:
        if e == len(options):
            return True
        for c in options[e]:
            if c not in used:
                used.add(c)
                chosen.append(c)
                if go(e + 1):
                    return True
                chosen.pop()
                used.remove(c)
        return False

    if go(0):
        return tuple(chosen)
    return None


def rainbow_path_exists(coll: CollectionLike, x: int, y: int, k: int, forbidden=()):
    """True iff some k-vertex x..y path admits an injective color assignment."""
    for path in all_simple_paths(coll, x, y, k - 1):
        if len(path) == k and exhaustive_assignment(coll, path, forbidden) is not None:
            return True
    return False


def rainbow_cycle_exists(coll: CollectionLike, length: int, forbidden=()) -> bool:
    """True iff some cycle on `length` vertices is rainbow-colorable."""
    view = as_view(coll)
    verts = sorted(view.vertices)
    banned = set(forbidden)

    def colorable(cyc: tuple[int, ...]) -> bool:
        options = []
        m = len(cyc)
        for i in range(m):
            u, v = cyc[i], cyc[(i + 1) % m]
            opts = [
                c for c in view.colors if c not in banned and view.has_edge(c, u, v)
            ]
            if not opts:
                return False
            options.append(opts)
        used: set[int] = set()

        def go(e: int) -> bool:
            if e == m:
                return True
            for c in options[e]:
                if c not in used:
                    used.add(c)
                    if go(e + 1):
                        return True
                    used.remove(c)
            return False

        return go(0)

    for head in verts:
        rest = [v for v in verts if v > head]
        for mid in permutations(rest, length - 1):
            cyc = (head, *mid)
            # one orientation per cycle
            if length > 2 and cyc[1] > cyc[-1]:
                continue
            ok = all(
                any(
                    view.has_edge(c, cyc[i], cyc[(i + 1) % length])
                    for c in view.colors
                )
                for i in range(length)
            )
            if ok and colorable(cyc):
                return True
    return False


def single_graph_path_exists(g, x: int, y: int, k: int) -> bool:
    """True iff one graph has a plain x..y path on exactly k vertices."""

    def walk(u: int, seen: set[int], left: int) -> bool:
        if left == 0:
            return u == y
        for v in g.neighbors(u):
            if v not in seen and (v != y or left == 1):
                seen.add(v)
                if walk(v, seen, left - 1):
                    return True
                seen.remove(v)
        return False

    if k == 1:
        return x == y
    return walk(x, {x}, k - 1)
