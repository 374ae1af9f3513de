"""Greedy 2-club cluster edge deletion.

Vertices are ranked once by square clustering coefficient. Each still
unclustered vertex, in rank order, seeds a cluster that grows one neighbor at
a time while it stays a 2-club. Edges between clusters are deleted.
"""
from __future__ import annotations

from fractions import Fraction

from .graph import Clustering, EditOp, Graph, square_coefficient


def score_vertices(g: Graph) -> list[tuple[int, Fraction]]:
    """Vertices with their square coefficient, best first, ties by id."""
    table = [(v, square_coefficient(g, v)) for v in g.vertices]
    table.sort(key=lambda item: (-item[1], item[0]))
    return table


def _admissible(g: Graph, cluster: set[int], u: int) -> bool:
    # cluster is already a 2-club and adding u never lengthens its distances
    inside = g.adj[u] & cluster
    for c in cluster:
        if c not in inside and not (g.adj[c] & inside):
            return False
    return True


def grow_two_club(g: Graph, seed: int, unclustered: set[int],
                  rank: dict[int, int] | None = None) -> set[int]:
    """Grow a 2-club from ``seed`` over ``unclustered`` vertices.

    ``rank`` maps vertices to their position in the score table; it is
    computed when omitted.
    """
    if rank is None:
        rank = {v: i for i, (v, _) in enumerate(score_vertices(g))}
    cluster = {seed}
    frontier = {u for u in g.adj[seed] if u in unclustered}
    while True:
        for u in sorted(frontier, key=rank.__getitem__):
            if _admissible(g, cluster, u):
                cluster.add(u)
                frontier.discard(u)
                frontier |= {x for x in g.adj[u] if x in unclustered and x not in cluster}
                break
        else:
            return cluster


def run_2cced(g: Graph) -> tuple[Clustering, list[EditOp]]:
    """Cluster ``g`` by edge deletion only.

    The input graph is not modified. Returns the clustering and the list of
    deleted edges.
    """
    table = score_vertices(g)
    rank = {v: i for i, (v, _) in enumerate(table)}
    unclustered = set(g.adj)
    clusters: list[set[int]] = []
    owner: dict[int, int] = {}
    for v, _ in table:
        if v not in unclustered:
            continue
        c = grow_two_club(g, v, unclustered, rank)
        unclustered -= c
        for x in c:
            owner[x] = len(clusters)
        clusters.append(c)

    work = g.copy()
    work.log = []
    for u, v in g.edges():
        if owner[u] != owner[v]:
            work.delete_edge(u, v)
    return Clustering(clusters, dict(work.origin)), work.log
