"""Decision procedures and recognizers for collection-level properties:
panconnectivity (single-graph and rainbow), rainbow Hamiltonian connectivity,
the extremal join family, obstruction classification, and the degree-threshold
theorem checker built from those parts.

Verdict conventions: True/False are exhaustive-search answers; None means the
node budget ran out before the answer was decided, and is never collapsed
into False.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import (
    CollectionLike,
    ColoredPath,
    GraphCollection,
    SimpleGraph,
    as_view,
    bits,
    collection_min_degree,
    verify_colored_path,
)
from .search import (
    BudgetExceeded,
    SearchBudget,
    find_rainbow_ham_path,
    find_rainbow_path,
    rainbow_distance,
)


@dataclass(frozen=True)
class ExtremalWitness:
    """A recognized obstruction structure, re-verified before emission.

    kind is one of "F_family", "two_cliques", "join_partition",
    "single_graph_split"; partition maps role names to vertex tuples.
    """

    kind: str
    partition: dict[str, tuple[int, ...]]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "partition": {k: list(v) for k, v in self.partition.items()},
        }


@dataclass
class PairReport:
    x: int
    y: int
    distance: int | None
    witnesses: dict[int, ColoredPath] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "distance": self.distance,
            "witnesses": {
                str(k): self.witnesses[k].to_json_dict()
                for k in sorted(self.witnesses)
            },
        }


@dataclass
class PanconnectivityCertificate:
    """Per-pair rainbow distance and k-path witnesses.

    verdict True requires every pair to carry witnesses for its whole
    k-range [distance+1, k_cap]; False carries the lexicographically smallest
    failing (x, y, k); None means a budget ran out first. k is capped at
    min(n, m+1) since a k-path needs k-1 distinct colors; certificates carry
    the cap so a reader can tell when it bound the range.
    """

    n: int
    m: int
    verdict: bool | None
    pairs: list[PairReport]
    failure: tuple[int, int, int | None] | None
    extremal: ExtremalWitness | None
    k_cap: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "verdict": self.verdict if self.verdict is not None else "unknown",
            "pairs": [p.to_json_dict() for p in self.pairs],
            "failure": (
                None
                if self.failure is None
                else {
                    "x": self.failure[0],
                    "y": self.failure[1],
                    "k": self.failure[2],
                }
            ),
            "extremal": (
                None if self.extremal is None else self.extremal.to_json_dict()
            ),
            "k_cap": self.k_cap,
        }


@dataclass
class HamConnectivityReport:
    """holds True iff every pair has a rainbow Hamiltonian path."""

    holds: bool | None
    witnesses: dict[tuple[int, int], ColoredPath] = field(default_factory=dict)
    failing_pair: tuple[int, int] | None = None

    def to_json_dict(self) -> dict:
        return {
            "holds": self.holds if self.holds is not None else "unknown",
            "witnesses": {
                f"{x},{y}": p.to_json_dict()
                for (x, y), p in sorted(self.witnesses.items())
            },
            "failing_pair": (
                None if self.failing_pair is None else list(self.failing_pair)
            ),
        }


def _plain_distances(g: SimpleGraph, src: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.neighbors(u):
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def is_panconnected_single(g: SimpleGraph, budget: SearchBudget | None = None) -> bool:
    """Every pair joined by a plain k-path for all k in [d(x,y)+1, n].

    A single graph is the collection of n-1 copies of itself: with that many
    colors an injective assignment always exists, so rainbow search decides
    plain path existence.
    """
    if g.n < 2:
        raise ValueError("need at least two vertices")
    coll = GraphCollection(g.n, (g,) * (g.n - 1))
    for x in range(g.n):
        dist = _plain_distances(g, x)
        for y in range(x + 1, g.n):
            d = dist[y]
            if d is None:
                return False
            for k in range(d + 1, g.n + 1):
                if find_rainbow_path(coll, x, y, k, budget=budget) is None:
                    return False
    return True


def is_rainbow_panconnected(
    coll: CollectionLike, budget: SearchBudget | None = None
) -> PanconnectivityCertificate:
    """Certificate over all pairs, k from distance+1 to min(n, m+1).

    Pairs are swept in lexicographic order and k ascending, so a False
    verdict's failing triple is the lexicographically smallest one. The sweep
    stops at the first failure; budget exhaustion anywhere yields verdict
    None ("unknown"), never False.
    """
    view = as_view(coll)
    alive = view.vertices
    k_cap = min(view.n_surviving, view.m_surviving + 1)
    pairs: list[PairReport] = []
    try:
        for i, x in enumerate(alive):
            for y in alive[i + 1 :]:
                d = rainbow_distance(view, x, y, budget=budget)
                report = PairReport(x, y, d)
                pairs.append(report)
                if d is None:
                    # no rainbow path at any length: fails wholesale
                    return PanconnectivityCertificate(
                        view.n_surviving,
                        view.m_surviving,
                        False,
                        pairs,
                        (x, y, None),
                        None,
                        k_cap,
                    )
                for k in range(d + 1, k_cap + 1):
                    path = find_rainbow_path(view, x, y, k, budget=budget)
                    if path is None:
                        return PanconnectivityCertificate(
                            view.n_surviving,
                            view.m_surviving,
                            False,
                            pairs,
                            (x, y, k),
                            None,
                            k_cap,
                        )
                    report.witnesses[k] = path
    except BudgetExceeded:
        return PanconnectivityCertificate(
            view.n_surviving, view.m_surviving, None, pairs, None, None, k_cap
        )
    return PanconnectivityCertificate(
        view.n_surviving, view.m_surviving, True, pairs, None, None, k_cap
    )


def is_rainbow_ham_connected(
    coll: CollectionLike, budget: SearchBudget | None = None
) -> HamConnectivityReport:
    """Rainbow Hamiltonian path between every pair of surviving vertices."""
    view = as_view(coll)
    if view.m_surviving < view.n_surviving - 1:
        raise ValueError(
            f"{view.m_surviving} colors cannot span {view.n_surviving} vertices"
        )
    report = HamConnectivityReport(holds=True)
    alive = view.vertices
    try:
        for i, x in enumerate(alive):
            for y in alive[i + 1 :]:
                path = find_rainbow_ham_path(view, x, y, budget=budget)
                if path is None:
                    return HamConnectivityReport(False, report.witnesses, (x, y))
                report.witnesses[(x, y)] = path
    except BudgetExceeded:
        return HamConnectivityReport(None, report.witnesses, None)
    return report


# -- extremal recognizers ---------------------------------------------------


def _components(g: SimpleGraph, inside: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Connected components of g restricted to `inside`."""
    inside_set = set(inside)
    seen: set[int] = set()
    comps = []
    for start in inside:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.neighbors(u):
                if v in inside_set and v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(tuple(sorted(comp)))
    return comps


def _verify_F_partition(g: SimpleGraph, q1: tuple[int, ...], q2: tuple[int, ...]):
    """Check one graph against the join-family shape; returns the single-edge
    component or None."""
    n = g.n
    if len(q1) != (n - 1) // 2 or len(q2) != (n + 1) // 2:
        return None
    q1_set, q2_set = set(q1), set(q2)
    for u in q1:
        # independent inside, joined to all of q2
        if any(v in q1_set for v in g.neighbors(u)):
            return None
        if set(g.neighbors(u)) != q2_set:
            return None
    comps = _components(g, q2)
    single = None
    for comp in comps:
        inner_deg_ok = all(
            any(v in comp for v in g.neighbors(u) if v in q2_set) for u in comp
        )
        if not inner_deg_ok:
            return None  # δ(Q2) ≥ 1 fails
        if len(comp) == 2 and single is None:
            single = comp
    return single


def recognize_F_family(coll: GraphCollection) -> ExtremalWitness | None:
    """Identical graphs shaped independent-half joined to a min-degree-1 half
    containing a single-edge component.

    Detection: a vertex of the independent half has neighborhood exactly the
    other half, so its non-neighborhood (itself included) is the candidate
    half; an exhaustive partition sweep backs that up for n <= 11.
    """
    n = coll.n
    if n % 2 == 0 or n < 5:
        return None
    g0 = coll.graphs[0]
    if any(g is not g0 and g != g0 for g in coll.graphs[1:]):
        return None
    half = (n - 1) // 2

    def attempt(q1: tuple[int, ...]) -> ExtremalWitness | None:
        q2 = tuple(v for v in range(n) if v not in set(q1))
        single = _verify_F_partition(g0, q1, q2)
        if single is None:
            return None
        return ExtremalWitness(
            "F_family", {"q1": q1, "q2": q2, "single_edge": single}
        )

    tried: set[tuple[int, ...]] = set()
    for v in range(n):
        q1 = tuple(sorted(set(range(n)) - set(g0.neighbors(v))))
        if len(q1) == half and q1 not in tried:
            tried.add(q1)
            found = attempt(q1)
            if found is not None:
                return found
    if n <= 11:
        for q1 in combinations(range(n), half):
            if q1 in tried:
                continue
            found = attempt(q1)
            if found is not None:
                return found
    return None


def f_family_rejection_reason(coll: GraphCollection) -> str:
    """Why recognize_F_family returned none, for violation bundles."""
    n = coll.n
    if n % 2 == 0:
        return "vertex count is even"
    if n < 5:
        return "vertex count below 5"
    g0 = coll.graphs[0]
    if any(g != g0 for g in coll.graphs[1:]):
        diff = next(i for i, g in enumerate(coll.graphs) if g != g0)
        return f"graphs 0 and {diff} differ"
    return "no partition matches the join-family shape"


def recognize_clique_split(g: SimpleGraph) -> ExtremalWitness | None:
    """Graph equal to two disjoint cliques covering every vertex."""
    comps = _components(g, tuple(range(g.n)))
    if len(comps) != 2:
        return None
    for comp in comps:
        for u, v in combinations(comp, 2):
            if not g.has_edge(u, v):
                return None
    a, b = sorted(comps, key=lambda c: (len(c), c))
    return ExtremalWitness("single_graph_split", {"half1": a, "half2": b})


def recognize_two_cliques(coll: GraphCollection) -> ExtremalWitness | None:
    """All graphs identical and equal to two cliques of exactly half size."""
    n = coll.n
    if n % 2 != 0:
        return None
    g0 = coll.graphs[0]
    if any(g != g0 for g in coll.graphs[1:]):
        return None
    split = recognize_clique_split(g0)
    if split is None:
        return None
    h1, h2 = split.partition["half1"], split.partition["half2"]
    if len(h1) != n // 2:
        return None
    return ExtremalWitness("two_cliques", {"half1": h1, "half2": h2})


def recognize_join_partition(coll: GraphCollection) -> ExtremalWitness | None:
    """Partition (H, I) with |H| = (n-2)/2: every graph has all H-I edges and
    an independent I; H interiors are unconstrained."""
    n = coll.n
    if n % 2 != 0:
        return None
    h_size = (n - 2) // 2

    def check(h: tuple[int, ...]) -> bool:
        iset = tuple(v for v in range(n) if v not in set(h))
        for g in coll.graphs:
            for u in iset:
                nb = set(g.neighbors(u))
                if nb != set(h):
                    return False
        return True

    for h in combinations(range(n), h_size):
        if check(h):
            iset = tuple(v for v in range(n) if v not in set(h))
            return ExtremalWitness("join_partition", {"h": h, "i": iset})
    return None


@dataclass
class ObstructionClassification:
    case: str  # "i" | "ii" | "iii"
    within_hypothesis: bool
    witness: ExtremalWitness | None
    ham_report: HamConnectivityReport | None

    def to_json_dict(self) -> dict:
        return {
            "case": self.case,
            "within_hypothesis": self.within_hypothesis,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "ham_report": (
                None if self.ham_report is None else self.ham_report.to_json_dict()
            ),
        }


def classify_ham_path_obstruction(
    coll: GraphCollection, budget: SearchBudget | None = None
) -> ObstructionClassification:
    """Trichotomy for n-graph collections: the two structural obstructions
    are recognized first (they are cheap); otherwise search certifies the
    Hamiltonian-connected case.
    """
    if coll.m != coll.n:
        raise ValueError(f"expected {coll.n} graphs, got {coll.m}")
    within = collection_min_degree(coll) >= coll.n // 2 - 1
    two = recognize_two_cliques(coll)
    if two is not None:
        return ObstructionClassification("ii", within, two, None)
    join = recognize_join_partition(coll)
    if join is not None:
        return ObstructionClassification("iii", within, join, None)
    report = is_rainbow_ham_connected(coll, budget=budget)
    return ObstructionClassification("i", within, None, report)


@dataclass
class Theorem15Result:
    outcome: str  # "holds" | "violated" | "inconclusive"
    via: str | None  # "panconnected" | "F_family"
    certificate: PanconnectivityCertificate
    rejection_reason: str | None = None  # why F-recognition failed, on violation

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "via": self.via,
            "certificate": self.certificate.to_json_dict(),
            "rejection_reason": self.rejection_reason,
        }


def verify_theorem_1_5(
    coll: GraphCollection, budget: SearchBudget | None = None
) -> Theorem15Result:
    """Either the collection is rainbow panconnected or it is the extremal
    join family; anything else is a violation bundle.

    Preconditions (m = n-1, min degree >= (n+1)/2) are rejected, not judged.
    """
    n = coll.n
    if coll.m != n - 1:
        raise ValueError(f"need {n - 1} graphs, got {coll.m}")
    delta = collection_min_degree(coll)
    if 2 * delta < n + 1:
        raise ValueError(f"min degree {delta} below {(n + 1 + 1) // 2}")
    cert = is_rainbow_panconnected(coll, budget=budget)
    if cert.verdict is True:
        return Theorem15Result("holds", "panconnected", cert)
    if cert.verdict is None:
        return Theorem15Result("inconclusive", None, cert)
    witness = recognize_F_family(coll)
    if witness is not None:
        cert.extremal = witness
        return Theorem15Result("holds", "F_family", cert)
    return Theorem15Result(
        "violated", None, cert, rejection_reason=f_family_rejection_reason(coll)
    )
