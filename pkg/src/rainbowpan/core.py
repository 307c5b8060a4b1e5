"""Core data model: simple graphs on a shared vertex set, collections, and
colored (transversal) paths and cycles.

Vertices are 0-based ints. Adjacency is stored as one bitmask per vertex,
sized for n <= 64 so neighborhood algebra stays single-word. Colors are
graph indices into the collection.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

MAX_VERTICES = 64
MAX_COLORS = 63


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits outside the vertex range")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge ({v}, {u})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if u < v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def with_edge(self, u: int, v: int) -> "SimpleGraph":
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return SimpleGraph(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> "SimpleGraph":
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return SimpleGraph(self.n, tuple(adj))


def _check_pair(n: int, u: int, v: int) -> None:
    if u == v:
        raise ValueError(f"loop edge ({u}, {v})")
    for w in (u, v):
        if not 0 <= w < n:
            raise ValueError(f"vertex {w} outside [0, {n})")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Build a validated SimpleGraph from an edge list (duplicates collapse)."""
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return SimpleGraph(n, tuple(adj))


def min_degree(g: SimpleGraph) -> int:
    return min(g.degree(v) for v in range(g.n))


def sigma2(g: SimpleGraph) -> int | None:
    """Minimum degree sum over non-adjacent vertex pairs; None for complete graphs."""
    best: int | None = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                s = g.degree(u) + g.degree(v)
                if best is None or s < best:
                    best = s
    return best


@dataclass(frozen=True)
class GraphCollection:
    """Ordered collection of graphs over one shared vertex set."""

    n: int
    graphs: tuple[SimpleGraph, ...]

    def __post_init__(self) -> None:
        if not self.graphs:
            raise ValueError("collection needs at least one graph")
        if len(self.graphs) > MAX_COLORS:
            raise ValueError(f"collection exceeds {MAX_COLORS} graphs")
        for i, g in enumerate(self.graphs):
            if g.n != self.n:
                raise ValueError(f"graph {i} has n={g.n}, expected {self.n}")

    @property
    def m(self) -> int:
        return len(self.graphs)

    def __getitem__(self, color: int) -> SimpleGraph:
        return self.graphs[color]

    def has_edge(self, color: int, u: int, v: int) -> bool:
        return self.graphs[color].has_edge(u, v)


def collection_min_degree(coll: GraphCollection) -> int:
    return min(min_degree(g) for g in coll.graphs)


@dataclass(frozen=True)
class ColoredPath:
    """Vertex path with one distinct color (graph index) per edge."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("empty path")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex in path")
        if len(self.colors) != len(self.vertices) - 1:
            raise ValueError("path needs exactly one color per edge")
        if len(set(self.colors)) != len(self.colors):
            raise ValueError("repeated color in path")

    @property
    def k(self) -> int:
        """Vertex count (the k in 'k-path')."""
        return len(self.vertices)

    def edge_items(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, color) per edge in path order."""
        for i, c in enumerate(self.colors):
            yield (self.vertices[i], self.vertices[i + 1], c)

    def reversed(self) -> "ColoredPath":
        return ColoredPath(self.vertices[::-1], self.colors[::-1])

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "colors": list(self.colors)}


@dataclass(frozen=True)
class ColoredCycle:
    """Vertex cycle with one distinct color per edge, closing edge included."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValueError("cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex in cycle")
        if len(self.colors) != len(self.vertices):
            raise ValueError("cycle needs exactly one color per edge")
        if len(set(self.colors)) != len(self.colors):
            raise ValueError("repeated color in cycle")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edge_items(self) -> Iterator[tuple[int, int, int]]:
        k = len(self.vertices)
        for i, c in enumerate(self.colors):
            yield (self.vertices[i], self.vertices[(i + 1) % k], c)

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "colors": list(self.colors)}


@dataclass(frozen=True)
class SubCollectionView:
    """Copy-free restriction of a collection: vertices and colors masked out.

    Vertex ids and color ids stay those of the base collection.
    """

    base: GraphCollection
    removed_vertices: frozenset[int] = field(default_factory=frozenset)
    removed_colors: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for v in self.removed_vertices:
            if not 0 <= v < self.base.n:
                raise ValueError(f"removed vertex {v} outside range")
        for c in self.removed_colors:
            if not 0 <= c < self.base.m:
                raise ValueError(f"removed color {c} outside range")
        if len(self.removed_colors) >= self.base.m:
            raise ValueError("view removes every color")
        if len(self.removed_vertices) >= self.base.n:
            raise ValueError("view removes every vertex")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def vertex_mask(self) -> int:
        return ((1 << self.base.n) - 1) & ~mask_of(self.removed_vertices)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(bits(self.vertex_mask))

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(c for c in range(self.base.m) if c not in self.removed_colors)

    @property
    def n_surviving(self) -> int:
        return self.base.n - len(self.removed_vertices)

    @property
    def m_surviving(self) -> int:
        return self.base.m - len(self.removed_colors)

    def adj_mask(self, color: int, v: int) -> int:
        """Restricted adjacency row; zero for removed vertices/colors."""
        if color in self.removed_colors or v in self.removed_vertices:
            return 0
        return self.base.graphs[color].adj[v] & self.vertex_mask

    def has_edge(self, color: int, u: int, v: int) -> bool:
        return bool((self.adj_mask(color, u) >> v) & 1)

    def degree(self, color: int, v: int) -> int:
        return self.adj_mask(color, v).bit_count()


CollectionLike = Union[GraphCollection, SubCollectionView]


def as_view(coll: CollectionLike) -> SubCollectionView:
    if isinstance(coll, SubCollectionView):
        return coll
    return SubCollectionView(coll)


def restrict(
    coll: CollectionLike,
    remove_vertices: Iterable[int] = (),
    remove_colors: Iterable[int] = (),
) -> SubCollectionView:
    """View with extra vertices/colors removed. Composes: restricting a view
    merges removal sets against the original base."""
    view = as_view(coll)
    return SubCollectionView(
        view.base,
        view.removed_vertices | frozenset(remove_vertices),
        view.removed_colors | frozenset(remove_colors),
    )


def check_colored_path(coll: CollectionLike, path: ColoredPath) -> str | None:
    """First violation making path invalid in coll, or None if valid."""
    view = as_view(coll)
    return _check_items(view, path.vertices, path.edge_items(), len(path.colors))


def check_colored_cycle(coll: CollectionLike, cycle: ColoredCycle) -> str | None:
    view = as_view(coll)
    return _check_items(view, cycle.vertices, cycle.edge_items(), len(cycle.colors))


def _check_items(view, vertices, edge_items, n_edges) -> str | None:
    vmask = view.vertex_mask
    alive_colors = set(view.colors)
    if n_edges > len(alive_colors):
        return f"{n_edges} edges exceed {len(alive_colors)} available colors"
    for v in vertices:
        if not 0 <= v < view.n:
            return f"vertex {v} outside range"
        if not (vmask >> v) & 1:
            return f"vertex {v} removed by view"
    for u, v, c in edge_items:
        if c not in alive_colors:
            return f"color {c} unavailable"
        if not view.has_edge(c, u, v):
            return f"edge ({u}, {v}) missing from graph {c}"
    return None


def verify_colored_path(coll: CollectionLike, path: ColoredPath) -> bool:
    return check_colored_path(coll, path) is None


def verify_colored_cycle(coll: CollectionLike, cycle: ColoredCycle) -> bool:
    return check_colored_cycle(coll, cycle) is None


def union_adjacency(coll: CollectionLike) -> list[int]:
    """Per-vertex union adjacency across surviving colors, restricted."""
    view = as_view(coll)
    rows = [0] * view.n
    for c in view.colors:
        for v in bits(view.vertex_mask):
            rows[v] |= view.adj_mask(c, v)
    return rows
