"""Planted overlapping-community graphs with known ground truth.

A simple stand-in for LFR-style benchmarks: community sizes are balanced,
a fixed fraction of vertices joins a second community, and edges are
independent coin flips with one probability inside communities and another
between them.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class SynthParams:
    n: int = 137
    communities: int = 6
    overlap_fraction: float = 0.3
    p_in: float = 0.5
    p_out: float = 0.04
    rng_seed: int = 0

    def validate(self) -> None:
        if self.n < 1 or self.communities < 1:
            raise ValueError("n and communities must be positive")
        if self.n < self.communities:
            raise ValueError("need at least one vertex per community")
        if not 0 <= self.overlap_fraction <= 1:
            raise ValueError(f"overlap_fraction must be in [0, 1], got {self.overlap_fraction}")
        if not 0 <= self.p_out <= self.p_in <= 1:
            raise ValueError("need 0 <= p_out <= p_in <= 1")
        if self.overlap_fraction > 0 and self.communities < 2:
            raise ValueError("overlap needs at least two communities")


def generate_planted(p: SynthParams) -> tuple[Graph, list[set[int]]]:
    """Sample a graph on vertices ``0..n-1`` and its community cover."""
    p.validate()
    rng = np.random.default_rng(p.rng_seed)
    order = rng.permutation(p.n)
    truth: list[set[int]] = [set() for _ in range(p.communities)]
    home = np.empty(p.n, dtype=int)
    for i, v in enumerate(order):
        home[v] = i % p.communities
        truth[home[v]].add(int(v))

    n_overlap = int(p.overlap_fraction * p.n)
    for v in rng.choice(p.n, size=n_overlap, replace=False):
        second = rng.integers(p.communities - 1)
        if second >= home[v]:
            second += 1
        truth[second].add(int(v))

    member = np.zeros((p.n, p.communities), dtype=bool)
    for c, comm in enumerate(truth):
        member[list(comm), c] = True
    shared = (member.astype(int) @ member.T.astype(int)) > 0

    iu, ju = np.triu_indices(p.n, k=1)
    prob = np.where(shared[iu, ju], p.p_in, p.p_out)
    keep = rng.random(len(prob)) < prob
    g = Graph(range(p.n), zip(iu[keep].tolist(), ju[keep].tolist()))
    return g, truth


def format_truth(truth) -> str:
    return "".join(" ".join(map(str, sorted(c))) + "\n" for c in truth)
