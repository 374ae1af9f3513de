"""Clustering quality measures: overlapping F-score and cluster distances."""
from __future__ import annotations

import statistics
from dataclasses import dataclass, fields
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .graph import EditOp, Graph


class UndefinedMetric(ValueError):
    pass


def _f1(a: set, b: set) -> float:
    return 2 * len(a & b) / (len(a) + len(b))


def overlap_f_score(pred: Iterable[Iterable[int]], truth: Iterable[Iterable[int]]) -> float:
    """Symmetric average best-match F1 between two cover families.

    Average over truth communities of the best F1 against any predicted
    cluster, the same with roles swapped, and the mean of the two.
    """
    P = _dedup(pred)
    T = _dedup(truth)
    if not P or not T:
        raise UndefinedMetric("F-score needs nonempty prediction and truth")
    t_side = sum(max(_f1(t, p) for p in P) for t in T) / len(T)
    p_side = sum(max(_f1(p, t) for t in T) for p in P) / len(P)
    return (t_side + p_side) / 2


def _dedup(clusters: Iterable[Iterable[int]]) -> list[frozenset]:
    seen = []
    for c in clusters:
        c = frozenset(c)
        if c and c not in seen:
            seen.append(c)
    return seen


def _distance_matrix(g0: Graph, nodes: list[int]) -> np.ndarray:
    idx = {v: i for i, v in enumerate(nodes)}
    rows, cols = [], []
    for u, v in g0.edges():
        rows += [idx[u], idx[v]]
        cols += [idx[v], idx[u]]
    A = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(nodes), len(nodes)))
    return shortest_path(A, unweighted=True, directed=False)


class DistanceStats(NamedTuple):
    average: Optional[float]
    pairs: int
    excluded: int


def _pair_stats(g0: Graph, pred, intra: bool) -> DistanceStats:
    clusters = [set(c) for c in pred if c]
    members = sorted(set().union(*clusters)) if clusters else []
    for v in members:
        if v not in g0:
            raise KeyError(f"cluster vertex {v} not in graph")
    nodes = g0.vertices
    idx = {v: i for i, v in enumerate(nodes)}
    sel = np.array([idx[v] for v in members], dtype=int)
    if len(sel) < 2:
        return DistanceStats(None, 0, 0)
    D = _distance_matrix(g0, nodes)[np.ix_(sel, sel)]
    pos = {v: i for i, v in enumerate(members)}
    together = np.zeros((len(sel), len(sel)), dtype=bool)
    for c in clusters:
        ci = [pos[v] for v in c]
        together[np.ix_(ci, ci)] = True
    mask = together if intra else ~together
    mask = np.triu(mask, k=1)
    d = D[mask]
    finite = np.isfinite(d)
    excluded = int((~finite).sum())
    n = int(finite.sum())
    if n == 0:
        return DistanceStats(None, 0, excluded)
    return DistanceStats(float(d[finite].sum() / n), n, excluded)


def intra_cluster_distance(g0: Graph, pred) -> DistanceStats:
    """Mean distance in ``g0`` over pairs sharing a cluster, pooled over clusters.

    Unreachable pairs are left out of the average and counted in
    ``excluded``; the average is None when no reachable pair exists.
    """
    return _pair_stats(g0, pred, intra=True)


def inter_cluster_distance(g0: Graph, pred) -> DistanceStats:
    """Mean distance in ``g0`` over pairs that share no cluster."""
    return _pair_stats(g0, pred, intra=False)


def edit_cost(log: Sequence[EditOp]) -> int:
    return len(log)


@dataclass
class QualityReport:
    f_score: Optional[float] = None
    intra_cd: Optional[float] = None
    inter_cd: Optional[float] = None
    excluded_pairs: int = 0
    cost: Optional[int] = None
    num_clusters: int = 0
    size_min: int = 0
    size_median: float = 0
    size_max: int = 0
    runtime_seconds: Optional[float] = None

    def to_text(self) -> str:
        """One ``key value`` line per defined field."""
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if isinstance(value, float):
                value = f"{value:.6f}"
            lines.append(f"{f.name} {value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "QualityReport":
        types = {f.name: f.type for f in fields(cls)}
        kw = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, value = line.split(None, 1)
            if key not in types:
                raise ValueError(f"unknown report field {key!r}")
            kw[key] = int(value) if key in ("excluded_pairs", "cost", "num_clusters",
                                            "size_min", "size_max") else float(value)
        return cls(**kw)


def quality_report(g0: Graph, pred, truth=None, log: Optional[Sequence[EditOp]] = None,
                   runtime: Optional[float] = None) -> QualityReport:
    """Collect every measure for an origin-id clustering of ``g0``."""
    pred = [set(c) for c in pred]
    intra, _, ex_in = _pair_stats(g0, pred, intra=True)
    inter, _, ex_out = _pair_stats(g0, pred, intra=False)
    sizes = [len(c) for c in pred] or [0]
    return QualityReport(
        f_score=overlap_f_score(pred, truth) if truth else None,
        intra_cd=intra,
        inter_cd=inter,
        excluded_pairs=ex_in + ex_out,
        cost=edit_cost(log) if log is not None else None,
        num_clusters=len(pred),
        size_min=min(sizes),
        size_median=float(statistics.median(sizes)),
        size_max=max(sizes),
        runtime_seconds=runtime,
    )
