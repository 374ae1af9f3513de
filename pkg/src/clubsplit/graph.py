"""Mutable undirected graph with origin tracking, edit operations and 2-club tests.

Vertex ids are nonnegative integers. Input vertices are their own origin;
copies produced by :meth:`Graph.split_vertex` get fresh ids above every id
seen so far and inherit the origin of the vertex they were split from.
"""
from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Union


class GraphError(Exception):
    """Base class for graph errors."""


class VertexNotFound(GraphError, KeyError):
    pass


class EdgeNotFound(GraphError, KeyError):
    pass


class InvalidSplit(GraphError, ValueError):
    pass


class ParseError(GraphError, ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int

    def __str__(self) -> str:
        return f"D {self.u} {self.v}"


@dataclass(frozen=True)
class SplitVertex:
    v: int
    internal: frozenset
    # None when read back from a file; replay then allocates the next fresh id
    new_id: Union[int, None] = None

    def __str__(self) -> str:
        return f"S {self.v} -> " + " ".join(str(x) for x in sorted(self.internal))


EditOp = Union[DeleteEdge, SplitVertex]


class Graph:
    """Simple undirected graph.

    Every successful :meth:`delete_edge` and :meth:`split_vertex` call is
    appended to :attr:`log`, so the log of a graph built from an input graph
    replays to the current state.
    """

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        self.adj: dict[int, set[int]] = {}
        self.origin: dict[int, int] = {}
        self.log: list[EditOp] = []
        self._m = 0
        self._next_id = 0
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # construction

    def add_vertex(self, v: int) -> None:
        if v < 0:
            raise ValueError(f"vertex ids must be nonnegative, got {v}")
        if v not in self.adj:
            self.adj[v] = set()
            self.origin[v] = v
            self._next_id = max(self._next_id, v + 1)

    def add_edge(self, u: int, v: int) -> bool:
        """Add edge ``{u, v}``; return False for self-loops and duplicates."""
        self.add_vertex(u)
        self.add_vertex(v)
        if u == v or v in self.adj[u]:
            return False
        self.adj[u].add(v)
        self.adj[v].add(u)
        self._m += 1
        return True

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.adj = {v: set(nb) for v, nb in self.adj.items()}
        g.origin = dict(self.origin)
        g.log = list(self.log)
        g._m = self._m
        g._next_id = self._next_id
        return g

    # queries

    def __contains__(self, v: object) -> bool:
        return v in self.adj

    def __len__(self) -> int:
        return len(self.adj)

    def __iter__(self) -> Iterator[int]:
        return iter(self.adj)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def number_of_edges(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nb in self.adj.items() for v in nb if u < v)

    def neighbors(self, v: int) -> set[int]:
        try:
            return self.adj[v]
        except KeyError:
            raise VertexNotFound(v) from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adj and v in self.adj[u]

    def distances_from(self, v: int, cutoff: Union[int, None] = None,
                       within: Union[set, None] = None) -> dict[int, int]:
        """BFS distances from ``v``, optionally bounded and restricted to ``within``."""
        if v not in self.adj:
            raise VertexNotFound(v)
        dist = {v: 0}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            d = dist[x]
            if cutoff is not None and d >= cutoff:
                continue
            for y in self.adj[x]:
                if y not in dist and (within is None or y in within):
                    dist[y] = d + 1
                    queue.append(y)
        return dist

    def connected_components(self) -> list[set[int]]:
        seen: set[int] = set()
        comps = []
        for v in sorted(self.adj):
            if v in seen:
                continue
            comp = set(self.distances_from(v))
            seen |= comp
            comps.append(comp)
        return comps

    def origin_edges(self) -> set[frozenset]:
        """Edge set relabeled by origin (identifies the edited graph up to copy names)."""
        return {frozenset((self.origin[u], self.origin[v])) for u, v in self.edges()}

    # edits

    def delete_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise EdgeNotFound((u, v))
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self._m -= 1
        self.log.append(DeleteEdge(u, v))

    def split_vertex(self, v: int, internal: Iterable[int], new_id: Union[int, None] = None) -> int:
        """Split ``v`` so that it keeps ``internal``; a fresh copy takes the rest.

        Returns the id of the copy.
        """
        nb = self.neighbors(v)
        internal = frozenset(internal)
        if not internal or not internal < nb:
            raise InvalidSplit(f"internal part must be a nonempty proper subset of N({v})")
        if new_id is None:
            new_id = self._next_id
        elif new_id in self.adj:
            raise InvalidSplit(f"copy id {new_id} already in use")
        external = nb - internal
        self.adj[new_id] = set()
        self.origin[new_id] = self.origin[v]
        self._next_id = max(self._next_id, new_id + 1)
        for x in external:
            self.adj[x].discard(v)
            self.adj[x].add(new_id)
            self.adj[new_id].add(x)
        self.adj[v] = set(internal)
        self.log.append(SplitVertex(v, internal, new_id))
        return new_id

    def apply(self, op: EditOp) -> None:
        if isinstance(op, DeleteEdge):
            self.delete_edge(op.u, op.v)
        else:
            self.split_vertex(op.v, op.internal, op.new_id)

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self._m})"


def replay(g0: Graph, log: Iterable[EditOp]) -> Graph:
    """Apply ``log`` to a copy of ``g0`` (the copy starts with an empty log)."""
    g = g0.copy()
    g.log = []
    for op in log:
        g.apply(op)
    return g


# parsing / formatting

def parse_edge_list(text: Union[str, io.TextIOBase, Iterable[str]],
                    min_weight: Union[float, None] = None) -> Graph:
    """Read a whitespace-separated edge list.

    Lines are ``u v`` or ``u v w``; ``#`` and ``%`` start comment lines.
    Weights are ignored unless ``min_weight`` is given, in which case edges
    lighter than it are dropped (their endpoints are still added). An edge
    without a weight counts as weight 1.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    g = Graph()
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        tokens = s.split()
        if len(tokens) not in (2, 3):
            raise ParseError(lineno, f"expected 2 or 3 fields, got {len(tokens)}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"bad vertex id in {s!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "vertex ids must be nonnegative")
        weight = 1.0
        if len(tokens) == 3:
            try:
                weight = float(tokens[2])
            except ValueError:
                raise ParseError(lineno, f"bad weight {tokens[2]!r}") from None
        g.add_vertex(u)
        g.add_vertex(v)
        if min_weight is not None and weight < min_weight:
            continue
        g.add_edge(u, v)
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines += [f"# isolated {v}" for v in g.vertices if not g.adj[v]]
    return "".join(line + "\n" for line in lines)


def parse_edit_log(text: Union[str, Iterable[str]]) -> list[EditOp]:
    lines = text.splitlines() if isinstance(text, str) else text
    ops: list[EditOp] = []
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s[0] == "#":
            continue
        tokens = s.split()
        try:
            if tokens[0] == "D" and len(tokens) == 3:
                ops.append(DeleteEdge(int(tokens[1]), int(tokens[2])))
            elif tokens[0] == "S" and len(tokens) >= 4 and tokens[2] == "->":
                ops.append(SplitVertex(int(tokens[1]), frozenset(int(t) for t in tokens[3:])))
            else:
                raise ValueError
        except ValueError:
            raise ParseError(lineno, f"bad edit operation {s!r}") from None
    return ops


def format_edit_log(log: Iterable[EditOp]) -> str:
    return "".join(f"{op}\n" for op in log)


# structural primitives

def closed_two_neighborhood(g: Graph, v: int) -> set[int]:
    return set(g.distances_from(v, cutoff=2))


def is_two_club(g: Graph, S: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``S`` has diameter at most 2."""
    S = set(S)
    if len(S) <= 1:
        return True
    inner = {x: g.neighbors(x) & S for x in S}
    for x in S:
        reach = set(inner[x])
        reach.add(x)
        if len(reach) == len(S):
            continue
        for y in inner[x]:
            reach |= inner[y]
        if len(reach) != len(S):
            return False
    return True


def square_coefficient(g: Graph, v: int) -> Fraction:
    """Square clustering coefficient of ``v`` (Lind, Gonzalez and Herrmann).

    For each pair ``u, w`` of neighbors of ``v`` let ``q`` be the number of
    common neighbors of ``u`` and ``w`` other than ``v``. The coefficient is
    the sum of ``q`` over all pairs divided by the sum of ``a + q``, where
    ``a`` counts the remaining neighbors of ``u`` and ``w`` (excluding ``v``,
    each other, and the square-closing vertices). Returns 0 when no square is
    possible.
    """
    nb = g.neighbors(v)
    squares = 0
    potential = 0
    for u, w in combinations(sorted(nb), 2):
        q = len((g.adj[u] & g.adj[w]) - {v})
        theta = 1 if w in g.adj[u] else 0
        base = 1 + q + theta
        squares += q
        potential += (len(g.adj[u]) - base) + (len(g.adj[w]) - base) + q
    if potential == 0:
        return Fraction(0)
    return Fraction(squares, potential)


@dataclass
class Clustering:
    """Clusters over working ids, with the projection onto input vertices."""

    clusters: list[set[int]]
    origin: dict[int, int] = field(default_factory=dict)

    @property
    def origin_view(self) -> list[set[int]]:
        return [{self.origin.get(x, x) for x in c} for c in self.clusters]

    def sorted_origin_view(self) -> list[list[int]]:
        """Origin clusters with sorted members, ordered by smallest member."""
        return sorted(sorted(c) for c in self.origin_view)

    def __len__(self) -> int:
        return len(self.clusters)


def format_clusters(clusters: Iterable[Iterable[int]]) -> str:
    rows = sorted(sorted(c) for c in clusters)
    return "".join(" ".join(map(str, r)) + "\n" for r in rows)


def parse_clusters(text: Union[str, Iterable[str]]) -> list[set[int]]:
    lines = text.splitlines() if isinstance(text, str) else text
    out = []
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s[0] == "#":
            continue
        try:
            out.append({int(t) for t in s.split()})
        except ValueError:
            raise ParseError(lineno, f"bad vertex id in {s!r}") from None
    return out
