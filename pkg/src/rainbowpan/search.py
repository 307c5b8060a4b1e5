"""Rainbow path/cycle search over collections and views.

A path is rainbow when its edges map injectively to colors, each edge present
in its assigned graph. Exact-length existence queries run on the selected
kernel; feasibility of the color assignment is maintained incrementally by
the kernel (one augmenting step per appended edge), so infeasible branches
are pruned as soon as the partial edge set stops being assignable.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .core import (
    CollectionLike,
    ColoredCycle,
    ColoredPath,
    as_view,
    bits,
    check_colored_cycle,
    check_colored_path,
    union_adjacency,
)

DEFAULT_NODE_LIMIT = 50_000_000
BUDGET_ENV_VAR = "RAINBOW_BUDGET"


@dataclass(frozen=True)
class SearchBudget:
    """Node budget for one search query.

    node_limit counts search-tree nodes; exhausting it raises BudgetExceeded,
    a third outcome distinct from "no such path". The deterministic flag
    records that the caller requires reproducible witnesses; both kernels
    always search deterministically, so it never changes behavior.
    """

    node_limit: int = DEFAULT_NODE_LIMIT
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


def default_budget() -> SearchBudget:
    """Budget from the RAINBOW_BUDGET env var, or the 50M-node default."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        return SearchBudget(node_limit=int(raw))
    return SearchBudget()


class BudgetExceeded(Exception):
    """Search ran out of nodes before deciding existence."""

    def __init__(self, query: str, nodes: int):
        super().__init__(f"{query}: budget exhausted after {nodes} nodes")
        self.query = query
        self.nodes = nodes


def _dense(view, forbidden: frozenset[int]):
    """Flat kernel adjacency for surviving colors minus forbidden ones."""
    n = view.n
    vmask = view.vertex_mask
    active = [c for c in view.colors if c not in forbidden]
    adj = [0] * (len(active) * n)
    for pos, c in enumerate(active):
        base = pos * n
        for v in bits(vmask):
            adj[base + v] = view.adj_mask(c, v)
    return n, active, adj, vmask


def _require_vertex(view, v: int, name: str) -> None:
    if not 0 <= v < view.n:
        raise ValueError(f"{name}={v} outside vertex range")
    if not (view.vertex_mask >> v) & 1:
        raise ValueError(f"{name}={v} removed by view")


def assign_colors(
    coll: CollectionLike,
    vertices: Sequence[int],
    forbidden_colors: Iterable[int] = (),
) -> tuple[int, ...] | None:
    """Injective color assignment for the edges of a vertex path.

    None means the options admit no injective assignment (matching
    deficiency). A consecutive pair absent from every allowed graph violates
    the precondition and is rejected instead.

    Deterministic: edges are matched in path order, colors scanned ascending,
    via augmenting steps.
    """
    view = as_view(coll)
    forbidden = frozenset(forbidden_colors)
    if len(set(vertices)) != len(vertices):
        raise ValueError("repeated vertex in path")
    for v in vertices:
        _require_vertex(view, v, "vertex")
    options: list[int] = []
    for u, v in zip(vertices, vertices[1:]):
        om = 0
        for c in view.colors:
            if c not in forbidden and view.has_edge(c, u, v):
                om |= 1 << c
        if not om:
            raise ValueError(f"({u}, {v}) is not an edge of any allowed graph")
        options.append(om)

    color_edge: dict[int, int] = {}
    edge_color = [-1] * len(options)

    def augment(e: int, visited: set[int]) -> bool:
        for c in bits(options[e]):
            if c in visited:
                continue
            visited.add(c)
            if c not in color_edge or augment(color_edge[c], visited):
                color_edge[c] = e
                edge_color[e] = c
                return True
        return False

    for e in range(len(options)):
        if not augment(e, set()):
            return None
    return tuple(edge_color)


def find_rainbow_path(
    coll: CollectionLike,
    x: int,
    y: int,
    k: int,
    forbidden_colors: Iterable[int] = (),
    budget: SearchBudget | None = None,
) -> ColoredPath | None:
    """Rainbow path on exactly k vertices joining x and y, or None.

    Raises BudgetExceeded when the node budget runs out undecided.
    """
    view = as_view(coll)
    forbidden = frozenset(forbidden_colors)
    _require_vertex(view, x, "x")
    _require_vertex(view, y, "y")
    if x == y:
        raise ValueError("endpoints must differ")
    if not 2 <= k <= view.n_surviving:
        raise ValueError(f"k={k} outside [2, {view.n_surviving}]")
    n, active, adj, vmask = _dense(view, forbidden)
    if k - 1 > len(active):
        raise ValueError(f"k={k} needs {k - 1} colors, only {len(active)} available")
    if budget is None:
        budget = default_budget()
    status, verts, cols, nodes = kernels.find_path(
        n, len(active), adj, x, y, k, vmask, budget.node_limit
    )
    if status == kernels.BUDGET:
        raise BudgetExceeded(f"path x={x} y={y} k={k}", nodes)
    if status == kernels.NONE:
        return None
    path = ColoredPath(tuple(verts), tuple(active[c] for c in cols))
    problem = check_colored_path(view, path)
    if problem is not None:
        raise AssertionError(f"kernel returned invalid path: {problem}")
    return path


def find_rainbow_ham_path(
    coll: CollectionLike,
    x: int,
    y: int,
    forbidden_colors: Iterable[int] = (),
    budget: SearchBudget | None = None,
) -> ColoredPath | None:
    """Rainbow path through every surviving vertex, joining x and y."""
    view = as_view(coll)
    return find_rainbow_path(view, x, y, view.n_surviving, forbidden_colors, budget)


def rainbow_distance(
    coll: CollectionLike,
    x: int,
    y: int,
    forbidden_colors: Iterable[int] = (),
    budget: SearchBudget | None = None,
) -> int | None:
    """Length (edge count) of a shortest rainbow path, or None if unreachable.

    Iterative deepening from the union-graph distance, which is a lower bound.
    """
    view = as_view(coll)
    forbidden = frozenset(forbidden_colors)
    _require_vertex(view, x, "x")
    _require_vertex(view, y, "y")
    if x == y:
        return 0
    rows = union_adjacency(view)
    # union distance by BFS
    dist = {x: 0}
    frontier = [x]
    while frontier and y not in dist:
        nxt = []
        for u in frontier:
            for v in bits(rows[u]):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    if y not in dist:
        return None
    n_colors = sum(1 for c in view.colors if c not in forbidden)
    top = min(view.n_surviving - 1, n_colors)
    for length in range(dist[y], top + 1):
        if find_rainbow_path(view, x, y, length + 1, forbidden, budget) is not None:
            return length
    return None


def find_rainbow_cycle(
    coll: CollectionLike,
    length: int,
    forbidden_colors: Iterable[int] = (),
    budget: SearchBudget | None = None,
) -> ColoredCycle | None:
    """Rainbow cycle on exactly `length` vertices, or None."""
    view = as_view(coll)
    forbidden = frozenset(forbidden_colors)
    if length < 3:
        raise ValueError("cycle length below 3")
    if length > view.n_surviving:
        return None
    n, active, adj, vmask = _dense(view, forbidden)
    if length > len(active):
        raise ValueError(f"length={length} exceeds {len(active)} available colors")
    if budget is None:
        budget = default_budget()
    status, verts, cols, nodes = kernels.find_cycle(
        n, len(active), adj, length, vmask, budget.node_limit
    )
    if status == kernels.BUDGET:
        raise BudgetExceeded(f"cycle length={length}", nodes)
    if status == kernels.NONE:
        return None
    cycle = ColoredCycle(tuple(verts), tuple(active[c] for c in cols))
    problem = check_colored_cycle(view, cycle)
    if problem is not None:
        raise AssertionError(f"kernel returned invalid cycle: {problem}")
    return cycle
