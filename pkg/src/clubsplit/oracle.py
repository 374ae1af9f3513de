"""Exhaustive solvers for tiny instances and a solution checker.

These are deliberately naive: they enumerate edge subsets or operation
sequences and exist to validate the heuristics, not to be fast.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import Clustering, DeleteEdge, EditOp, Graph, GraphError, SplitVertex, is_two_club


class OracleRefusal(Exception):
    """Instance is outside the oracle budget."""


@dataclass(frozen=True)
class OracleBudget:
    kmax: int = 6
    max_vertices: int = 12
    max_edges: int = 20
    max_split_degree: int = 10

    def check(self, g: Graph, splits: bool = False) -> None:
        if self.kmax < 0:
            raise ValueError("kmax must be nonnegative")
        if len(g) > self.max_vertices:
            raise OracleRefusal(f"{len(g)} vertices exceeds limit {self.max_vertices}")
        if g.number_of_edges() > self.max_edges:
            raise OracleRefusal(f"{g.number_of_edges()} edges exceeds limit {self.max_edges}")
        if splits and g.adj and max(len(nb) for nb in g.adj.values()) > self.max_split_degree:
            raise OracleRefusal(f"degree exceeds split limit {self.max_split_degree}")


def is_club_cluster_graph(g: Graph) -> bool:
    """Every connected component is a 2-club."""
    return all(is_two_club(g, comp) for comp in g.connected_components())


def exact_2cced(g: Graph, budget: OracleBudget = OracleBudget()) -> Optional[int]:
    """Minimum number of edge deletions leaving a disjoint union of 2-clubs.

    Returns None if more than ``budget.kmax`` deletions are needed.
    """
    budget.check(g)
    edges = g.edges()
    for k in range(min(budget.kmax, len(edges)) + 1):
        for subset in combinations(edges, k):
            h = g.copy()
            for u, v in subset:
                h.delete_edge(u, v)
            if is_club_cluster_graph(h):
                return k
    return None


def _state_key(g: Graph) -> frozenset:
    # Each input edge survives at most once, so a vertex is pinned down by its
    # origin and the origins of its neighbors; this identifies the state up to
    # renaming of split copies. Isolated vertices never matter.
    o = g.origin
    return frozenset(
        (o[x], frozenset(o[y] for y in nb)) for x, nb in g.adj.items() if nb
    )


def _moves(g: Graph) -> Iterable[EditOp]:
    # components that are already 2-clubs never need touching
    dirty = [c for c in g.connected_components() if not is_two_club(g, c)]
    vs = sorted(set().union(*dirty)) if dirty else []
    for u in vs:
        for v in sorted(g.adj[u]):
            if u < v:
                yield DeleteEdge(u, v)
    for v in vs:
        nb = sorted(g.adj[v])
        if len(nb) < 2:
            continue
        # fix nb[0] inside to enumerate each bipartition once
        rest = nb[1:]
        for r in range(len(rest)):
            for extra in combinations(rest, r):
                yield SplitVertex(v, frozenset((nb[0],) + extra))


def exact_2ccedvs(g: Graph, budget: OracleBudget = OracleBudget()) -> Optional[int]:
    """Minimum number of deletions and splits leaving a disjoint union of 2-clubs.

    Iterative deepening over operation sequences. Returns None if more than
    ``budget.kmax`` operations are needed.
    """
    budget.check(g, splits=True)
    # largest remaining budget already shown to fail, per state
    failed: dict[frozenset, int] = {}

    def search(h: Graph, left: int) -> bool:
        if is_club_cluster_graph(h):
            return True
        if left == 0:
            return False
        key = _state_key(h)
        if failed.get(key, -1) >= left:
            return False
        for op in _moves(h):
            nxt = h.copy()
            nxt.log = []
            nxt.apply(op)
            if search(nxt, left - 1):
                return True
        failed[key] = left
        return False

    start = g.copy()
    start.log = []
    for k in range(budget.kmax + 1):
        if search(start, k):
            return k
    return None


@dataclass
class Verification:
    ok: bool
    reason: str = ""
    op_index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_solution(g0: Graph, log: Iterable[EditOp], clustering: Clustering) -> Verification:
    """Check that ``log`` turns ``g0`` into a graph that ``clustering`` explains.

    The replayed graph must have every component inside one cluster, every
    cluster must be a 2-club in it, and the clusters must partition its
    vertices.
    """
    h = g0.copy()
    h.log = []
    for i, op in enumerate(log):
        try:
            h.apply(op)
        except (GraphError, KeyError, ValueError) as exc:
            return Verification(False, f"op {i} ({op}) failed: {exc}", i)

    owner: dict[int, int] = {}
    for ci, c in enumerate(clustering.clusters):
        for x in c:
            if x not in h:
                return Verification(False, f"cluster {ci} has unknown vertex {x}")
            if x in owner:
                return Verification(False, f"vertex {x} in clusters {owner[x]} and {ci}")
            owner[x] = ci
    missing = set(h.adj) - owner.keys()
    if missing:
        return Verification(False, f"vertices not clustered: {sorted(missing)[:10]}")
    for u, v in h.edges():
        if owner[u] != owner[v]:
            return Verification(False, f"edge {u}-{v} joins clusters {owner[u]} and {owner[v]}")
    for ci, c in enumerate(clustering.clusters):
        if not is_two_club(h, c):
            return Verification(False, f"cluster {ci} is not a 2-club")
    return Verification(True)
