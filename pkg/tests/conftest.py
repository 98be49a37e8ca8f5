"""Shared test oracles.

Everything here is written independently of the package internals, on
purpose: plain adjacency dicts, list-based BFS, and exhaustive subset
scans.  Tests compare package output against these slow references.
"""

from __future__ import annotations

import itertools
import random

import pytest


def oracle_bfs(n: int, edges) -> list[list[int]]:
    """All-pairs distances by per-source BFS over adjacency lists.

    Returns a nested list with -1 for unreachable pairs.
    """
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    table = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if dist[w] == -1:
                        dist[w] = level
                        nxt.append(w)
            frontier = nxt
        table.append(dist)
    return table


def oracle_is_resolving(table, wset) -> bool:
    reps = [tuple(table[v][w] for w in wset) for v in range(len(table))]
    return len(set(reps)) == len(reps)


def oracle_min_resolving(table):
    """Smallest resolving set by exhaustive scan, first in sorted-tuple order.

    Requires a connected distance table.  Returns (size, subset).
    """
    n = len(table)
    if n <= 1:
        return 0, ()
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            if oracle_is_resolving(table, combo):
                return k, combo
    raise AssertionError("the full vertex set always resolves")


def oracle_min_hitting(masks, nbits):
    """Smallest bit subset intersecting every mask, exhaustively."""
    universe = list(range(nbits))
    for k in range(nbits + 1):
        for combo in itertools.combinations(universe, k):
            chosen = 0
            for b in combo:
                chosen |= 1 << b
            if all(m & chosen for m in masks):
                return k, combo
    return None


def random_connected_edges(rng: random.Random, n: int, p: float):
    """Random connected graph edge list; spanning tree plus coin-flip edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a = order[i]
        b = order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return sorted(edges)


@pytest.fixture
def rng():
    return random.Random(0xD1ACE)
