"""2-club cluster edge deletion with vertex splitting.

Each round looks at two unassigned seeds, one of minimum and one of maximum
degree. Around a seed ``v`` a random walk on the closed 2-neighborhood ranks
candidate members; every 2-club prefix of that ranking is priced by the edits
needed to cut it loose, normalized by its size, and the cheapest prefix over
both seeds is detached from the working graph as a cluster.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graph import Clustering, EditOp, Graph, SplitVertex, is_two_club

WALK_STEPS = 8
# probabilities closer than this are treated as ties (broken by id)
_TIE_DECIMALS = 12


class Action(enum.Enum):
    NONE = "none"
    DELETE = "delete"
    SPLIT = "split"
    ISOLATE = "isolate"


@dataclass
class WalkGraph:
    seed: int
    nodes: list[int]
    arcs: dict[tuple[int, int], int]
    transition: np.ndarray

    @property
    def index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.nodes)}


@dataclass
class CandidateCluster:
    members: set[int]
    cost: Fraction
    plan: dict[int, Action] = field(default_factory=dict)


def build_walk_graph(g: Graph, v: int) -> WalkGraph:
    """Walk graph on the closed 2-neighborhood of ``v``.

    Induced edges become two arcs of weight 1. A vertex ``u`` at distance 2
    also gets an arc back to ``v`` weighted by its number of neighbors
    outside the neighborhood.
    """
    dist = g.distances_from(v, cutoff=2)
    nodes = sorted(dist)
    inside = set(nodes)
    arcs: dict[tuple[int, int], int] = {}
    for x in nodes:
        for y in g.adj[x]:
            if y in inside:
                arcs[(x, y)] = 1
    for u in nodes:
        if dist[u] == 2:
            out = len(g.adj[u] - inside)
            if out > 0:
                arcs[(u, v)] = out

    idx = {x: i for i, x in enumerate(nodes)}
    W = np.zeros((len(nodes), len(nodes)))
    for (x, y), w in arcs.items():
        W[idx[x], idx[y]] = w
    sums = W.sum(axis=1)
    T = np.eye(len(nodes))
    nz = sums > 0
    T[nz] = W[nz] / sums[nz, None]
    return WalkGraph(v, nodes, arcs, T)


def transition_distribution(w: WalkGraph, v: int | None = None,
                            steps: int = WALK_STEPS) -> dict[int, float]:
    """Distribution after ``steps`` walk steps starting from the seed."""
    if v is None:
        v = w.seed
    p = np.zeros(len(w.nodes))
    p[w.index[v]] = 1.0
    for _ in range(steps):
        p = p @ w.transition
    return {x: float(p[i]) for i, x in enumerate(w.nodes)}


def rank_neighborhood(p: dict[int, float]) -> list[int]:
    return sorted(p, key=lambda x: (-round(p[x], _TIE_DECIMALS), x))


def _member_cost(ext: int, size: int) -> tuple[int, Action]:
    if ext == 0:
        return 0, Action.NONE
    if size == 1:
        return ext, Action.ISOLATE
    if ext == 1:
        return 1, Action.DELETE
    return 1, Action.SPLIT


def cluster_cost(g: Graph, X) -> CandidateCluster:
    """Price detaching ``X`` from the rest of ``g``.

    Each member with one outside neighbor loses that edge, each member with
    more is split (the copy takes the outside neighbors); either costs 1.
    The total is divided by ``|X|``. A single vertex cannot be split, so it
    is isolated at the cost of all its edges.
    """
    X = set(X)
    if not X:
        raise ValueError("cluster must be nonempty")
    if not is_two_club(g, X):
        raise ValueError("cluster is not a 2-club")
    total = 0
    plan = {}
    for x in X:
        c, action = _member_cost(len(g.adj[x] - X), len(X))
        total += c
        plan[x] = action
    return CandidateCluster(X, Fraction(total, len(X)), plan)


def best_prefix(g: Graph, ranked: list[int]) -> CandidateCluster:
    """Cheapest 2-club prefix of ``ranked``; ties go to the longer prefix."""
    if not ranked:
        raise ValueError("ranked list is empty")
    bit = {x: 1 << i for i, x in enumerate(ranked)}
    # adjacency restricted to the ranked vertices, as bitmasks
    adj = {}
    for x in ranked:
        m = 0
        for y in g.adj[x]:
            b = bit.get(y)
            if b:
                m |= b
        adj[x] = m

    prefix = 0
    reach: dict[int, int] = {}  # vertices within induced distance 2, itself included
    inside: dict[int, int] = {}  # neighbors inside the prefix
    best_size, best_cost = 0, None
    for i, z in enumerate(ranked):
        zb = bit[z]
        nz = adj[z] & prefix
        new_prefix = prefix | zb
        rz = zb | nz
        for x in ranked[:i]:
            xb = bit[x]
            if nz & xb:
                reach[x] |= zb | nz
                inside[x] += 1
                rz |= adj[x] & new_prefix
            elif adj[x] & nz:
                reach[x] |= zb
        reach[z] = rz
        inside[z] = bin(nz).count("1")
        prefix = new_prefix

        members = ranked[: i + 1]
        if all(reach[x] == prefix for x in members):
            size = i + 1
            total = sum(_member_cost(len(g.adj[x]) - inside[x], size)[0] for x in members)
            cost = Fraction(total, size)
            if best_cost is None or cost <= best_cost:
                best_size, best_cost = size, cost
    return cluster_cost(g, ranked[:best_size])


def process_cluster(g: Graph, c: CandidateCluster) -> set[int]:
    """Apply the planned edits so that ``c.members`` is cut off from the rest.

    Edits are logged on ``g``. Returns the members.
    """
    X = c.members
    for x in sorted(X):
        action = c.plan[x]
        outside = sorted(g.adj[x] - X)
        if action is Action.NONE:
            continue
        if action is Action.DELETE or action is Action.ISOLATE:
            for y in outside:
                g.delete_edge(x, y)
        else:
            g.split_vertex(x, g.adj[x] & X)
    return X


def candidate_for(g: Graph, v: int) -> CandidateCluster:
    walk = build_walk_graph(g, v)
    return best_prefix(g, rank_neighborhood(transition_distribution(walk, v)))


def run_2ccedvs(g: Graph) -> tuple[Clustering, list[EditOp]]:
    """Cluster ``g`` with edge deletions and vertex splits.

    The input graph is not modified. Emitted clusters are detached from the
    remaining vertices, so the working graph is simply the edited graph
    restricted to unassigned vertices.
    """
    work = g.copy()
    work.log = []
    unassigned = set(work.adj)
    clusters: list[set[int]] = []
    while unassigned:
        lo = min(unassigned, key=lambda x: (len(work.adj[x]), x))
        hi = min(unassigned, key=lambda x: (-len(work.adj[x]), x))
        best = candidate_for(work, lo)
        if hi != lo:
            other = candidate_for(work, hi)
            if other.cost < best.cost:
                best = other
        start = len(work.log)
        members = process_cluster(work, best)
        unassigned -= members
        unassigned |= {op.new_id for op in work.log[start:] if isinstance(op, SplitVertex)}
        clusters.append(set(members))
    return Clustering(clusters, dict(work.origin)), work.log

