"""Resolving-set primitives: representations, the resolving check, and
coordinate projections."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .graphs import CliqueFactors, DistanceMatrix


@dataclass(frozen=True)
class UnresolvedPair:
    """Two distinct vertices with identical distance vectors to the probe set.

    Falsy on purpose, so `if is_resolving(dist, w): ...` reads naturally
    while the failure case still carries its certificate.
    """

    x: int
    y: int

    def __bool__(self) -> bool:
        return False

    def __iter__(self):
        return iter((self.x, self.y))


def check_vertex_set(n: int, wset: Sequence[int]) -> list[int]:
    """Validate a vertex set: ids in range, no duplicates.  Returns a list."""
    out: list[int] = []
    seen: set[int] = set()
    for w in wset:
        w = int(w)
        if not 0 <= w < n:
            raise ValueError(f"vertex id {w} out of range for {n} vertices")
        if w in seen:
            raise ValueError(f"duplicate vertex id {w}")
        seen.add(w)
        out.append(w)
    return out


def representation(dist: DistanceMatrix, v: int, wset: Sequence[int]) -> tuple[int, ...]:
    """Distance vector from v to the probe set, in the set's order."""
    w = check_vertex_set(dist.n, wset)
    if not 0 <= v < dist.n:
        raise ValueError(f"vertex id {v} out of range")
    return tuple(int(dist.values[v, j]) for j in w)


def is_resolving(dist: DistanceMatrix, wset: Sequence[int]) -> bool | UnresolvedPair:
    """True when all representations are distinct, else the least bad pair.

    The certificate is the lexicographically least unresolved pair (x, y):
    x is the smallest vertex involved in any collision and y the smallest
    vertex sharing x's representation.
    """
    w = check_vertex_set(dist.n, wset)
    if dist.n <= 1:
        return True
    reps = dist.values[:, w] if w else np.zeros((dist.n, 0), dtype=np.uint16)
    _, inverse, counts = np.unique(reps, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.ravel()
    colliding = counts[inverse] >= 2
    if not colliding.any():
        return True
    x = int(np.flatnonzero(colliding)[0])
    group = np.flatnonzero(inverse == inverse[x])
    return UnresolvedPair(x, int(group[1]))


def projection(wset: Sequence[int], axis: int, factors: CliqueFactors) -> set[int]:
    """Set of factor values used by the set in one coordinate position."""
    w = check_vertex_set(factors.vertex_count, wset)
    if not 0 <= axis < factors.t:
        raise ValueError(f"axis {axis} out of range for {factors.t} factors")
    return {factors.coords_of(v)[axis] for v in w}


def swap_witness(
    wset: Sequence[int], factors: CliqueFactors
) -> tuple[int, int] | None:
    """Find two probe vertices whose coordinate swap the set cannot resolve.

    In a two-factor product with both factors at least 3, if the set
    contains members (u, v) and (x, y) with u != x and v != y whose four
    coordinate values appear in no other member, then (u, y) and (x, v)
    receive identical representations: every other member differs from both
    in both coordinates, and each of (u, v), (x, y) shares exactly one
    coordinate with each.  Returns the first such swapped pair as flat ids,
    scanning member pairs in set order, or None.
    """
    if factors.t != 2:
        raise ValueError("swap witness is defined for two-factor products")
    if any(m < 3 for m in factors.sizes):
        raise ValueError("swap witness requires both factors of size >= 3")
    w = check_vertex_set(factors.vertex_count, wset)
    coords = [factors.coords_of(v) for v in w]
    for i in range(len(coords)):
        u, v = coords[i]
        for j in range(i + 1, len(coords)):
            x, y = coords[j]
            if u == x or v == y:
                continue
            isolated = all(
                coords[k][0] not in (u, x) and coords[k][1] not in (v, y)
                for k in range(len(coords))
                if k != i and k != j
            )
            if isolated:
                return (factors.flat_index((u, y)), factors.flat_index((x, v)))
    return None
