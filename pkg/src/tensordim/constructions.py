"""Closed-form dimensions, certified resolving sets, and bounds for tensor
products of cliques.

For two factors K_m x K_n (2 <= m <= n) the metric dimension is known in
closed form, and every value is witnessed by an explicit set:

* (2, 2): the product is disconnected.
* m = 2, n >= 3: dimension n - 1, witnessed by one full row short one entry.
* m >= 3, n >= 2m - 1: dimension n - 1, witnessed by two shifted diagonals
  plus the rest of the first row.
* m >= 3, m <= n <= 2m - 2 ("balanced"): dimension ceil(2(m + n - 2) / 3),
  witnessed by three wrapped diagonal blocks.

Every constructor machine-checks its output before returning it and raises
ConstructionFailed otherwise; a failure is a bug, never silently repaired.
Coordinates below are 0-based; sets are returned as flat vertex ids in
block order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import CliqueFactors, tensor_clique_distances
from .metric import is_resolving
from .solver import DimResult, exact_metric_dimension


class ConstructionFailed(Exception):
    """A constructed set failed its resolving check (indicates a bug)."""

    def __init__(self, factors: CliqueFactors, wset: list[int], pair: tuple[int, int]):
        self.factors = factors
        self.wset = wset
        self.pair = pair
        super().__init__(
            f"constructed set of size {len(wset)} for factors {factors.sizes} "
            f"leaves the pair {pair} unresolved"
        )


@dataclass(frozen=True)
class FormulaCase:
    """Which closed-form case (m, n) falls in; k is the balanced block length."""

    kind: str  # "disconnected" | "m2" | "large_n" | "balanced"
    k: int | None = None


def formula_case(m: int, n: int) -> FormulaCase:
    """Case split for 2 <= m <= n.  Exactly one case applies."""
    if not 2 <= m <= n:
        raise ValueError(f"needs 2 <= m <= n, got ({m}, {n})")
    if m == 2 and n == 2:
        return FormulaCase("disconnected")
    if m == 2:
        return FormulaCase("m2")
    if n >= 2 * m - 1:
        return FormulaCase("large_n")
    return FormulaCase("balanced", k=(m + n - 2) // 3)


def dim_formula(m: int, n: int) -> DimResult:
    """Closed-form metric dimension of K_m x K_n (value only, no certificate).

    Argument order is normalized, so dim_formula(5, 3) == dim_formula(3, 5).
    """
    if m < 2 or n < 2:
        raise ValueError(f"factors must be at least 2, got ({m}, {n})")
    if m > n:
        m, n = n, m
    case = formula_case(m, n)
    if case.kind == "disconnected":
        return DimResult(None, None)
    if case.kind == "balanced":
        return DimResult(-(-2 * (m + n - 2) // 3), None)
    return DimResult(n - 1, None)


def _certified(wset: list[int], factors: CliqueFactors) -> list[int]:
    verdict = is_resolving(tensor_clique_distances(factors), wset)
    if not verdict:
        raise ConstructionFailed(factors, wset, (verdict.x, verdict.y))
    return wset


def construct_m2(n: int) -> list[int]:
    """Resolving set of size n - 1 for K_2 x K_n, n >= 3: the vertices
    (0, j) for j < n - 1."""
    if n < 3:
        raise ValueError(f"needs n >= 3, got {n}")
    factors = CliqueFactors((2, n))
    wset = [factors.flat_index((0, j)) for j in range(n - 1)]
    return _certified(wset, factors)


def construct_large_n(m: int, n: int) -> list[int]:
    """Resolving set of size n - 1 for K_m x K_n with n >= 2m - 1, m >= 3.

    Blocks: the diagonal (i, i) for i < m - 1, the shifted diagonal
    (i, m - 1 + i) for i < m - 1, and the first-row tail (0, j) for
    2(m - 1) <= j < n - 1.
    """
    if m < 3 or n < 2 * m - 1:
        raise ValueError(f"needs m >= 3 and n >= 2m - 1, got ({m}, {n})")
    factors = CliqueFactors((m, n))
    coords = [(i, i) for i in range(m - 1)]
    coords += [(i, m - 1 + i) for i in range(m - 1)]
    coords += [(0, j) for j in range(2 * (m - 1), n - 1)]
    return _certified([factors.flat_index(c) for c in coords], factors)


def construct_balanced(m: int, n: int) -> list[int]:
    """Resolving set of size m + n - 2 - k for K_m x K_n in the balanced
    range m <= n <= 2m - 2, m >= 3, where k = floor((m + n - 2) / 3).

    Three blocks (1-based here, converted below): the diagonal (i, i) for
    i <= k; the left column block (k + i, wrap(i)) for i <= m - k - 1; and
    the top row block (wrap(m - k - 1 + i), k + i) for i <= n - k - 1,
    where wrap folds an index into 1..k.  The three index ranges are
    disjoint by coordinate, so the size is exact.
    """
    if not (3 <= m <= n <= 2 * m - 2):
        raise ValueError(f"needs 3 <= m <= n <= 2m - 2, got ({m}, {n})")
    k = (m + n - 2) // 3

    def wrap(j: int) -> int:
        return (j - 1) % k + 1

    ones = [(i, i) for i in range(1, k + 1)]
    ones += [(k + i, wrap(i)) for i in range(1, m - k)]
    ones += [(wrap(m - k - 1 + i), k + i) for i in range(1, n - k)]
    factors = CliqueFactors((m, n))
    wset = [factors.flat_index((a - 1, b - 1)) for a, b in ones]
    return _certified(wset, factors)


def construct_resolving(m: int, n: int) -> list[int]:
    """Certified minimum resolving set of K_m x K_n for 2 <= m <= n,
    matching dim_formula in size."""
    if not 2 <= m <= n:
        raise ValueError(f"needs 2 <= m <= n, got ({m}, {n})")
    case = formula_case(m, n)
    if case.kind == "disconnected":
        raise ValueError("K_2 x K_2 is disconnected; no resolving set exists")
    if case.kind == "m2":
        return construct_m2(n)
    if case.kind == "large_n":
        return construct_large_n(m, n)
    return construct_balanced(m, n)


def lower_bound_largest_factor(factors: CliqueFactors) -> int:
    """max(m_i) - 1: a resolving set misses at most one value per factor,
    so its projection alone forces this many members.  Needs all
    factors >= 3."""
    if any(s < 3 for s in factors.sizes):
        raise ValueError("bound requires every factor of size >= 3")
    return max(factors.sizes) - 1


def _two_factor_set(a: int, b: int) -> list[int]:
    """construct_resolving oriented for arbitrary order of the two sizes."""
    if a <= b:
        return construct_resolving(a, b)
    swapped = CliqueFactors((b, a))
    target = CliqueFactors((a, b))
    out = []
    for v in construct_resolving(b, a):
        x, y = swapped.coords_of(v)
        out.append(target.flat_index((y, x)))
    return out


def lower_bound_subproduct(factors: CliqueFactors, *, exact: bool = False) -> int:
    """Largest dimension among the drop-one-factor subproducts.

    A resolving set of the full product projects to a resolving structure
    of every subproduct, so each subproduct dimension bounds from below.
    Two-factor subproducts use the closed form; deeper ones recurse on this
    same bound, or solve exactly when `exact` is set.  Needs t >= 3 and all
    factors >= 3.
    """
    if factors.t < 3:
        raise ValueError("bound needs at least three factors")
    if any(s < 3 for s in factors.sizes):
        raise ValueError("bound requires every factor of size >= 3")
    best = 0
    for drop in range(factors.t):
        sub = CliqueFactors(factors.sizes[:drop] + factors.sizes[drop + 1 :])
        if sub.t == 2:
            a, b = sorted(sub.sizes)
            value = dim_formula(a, b).dim
        elif exact:
            value = exact_metric_dimension(
                tensor_clique_distances(sub), factors=sub
            ).dim
        else:
            value = lower_bound_subproduct(sub)
        best = max(best, int(value))
    return best


def upper_bound_construction(factors: CliqueFactors) -> list[int]:
    """Certified resolving set of at most 3(|W_a| + |W_b|) vertices for a
    product of t >= 3 cliques, all factors >= 3.

    Drops the first smallest and the last largest factor (after sorting by
    size, for determinism); resolves each remaining subproduct (closed form
    for two factors, recursively otherwise); and crosses each subproduct
    set with the three lowest values 0, 1, 2 of its dropped factor.  Any
    two vertices differ somewhere, and one of the two blocks contains an
    anchor value avoiding both of their entries in its dropped coordinate,
    which reduces the comparison to the resolved subproduct.
    """
    if factors.t < 3:
        raise ValueError("construction needs at least three factors")
    if any(s < 3 for s in factors.sizes):
        raise ValueError("construction requires every factor of size >= 3")
    sizes = factors.sizes
    drop_lo = sizes.index(min(sizes))
    drop_hi = factors.t - 1 - sizes[::-1].index(max(sizes))

    def sub_set(drop: int) -> list[int]:
        sub = CliqueFactors(sizes[:drop] + sizes[drop + 1 :])
        if sub.t == 2:
            return _two_factor_set(*sub.sizes)
        return upper_bound_construction(sub)

    out: list[int] = []
    seen: set[int] = set()
    block_sizes = []
    for drop in (drop_lo, drop_hi):
        sub = CliqueFactors(sizes[:drop] + sizes[drop + 1 :])
        members = sub_set(drop)
        block_sizes.append(len(members))
        for anchor in (0, 1, 2):
            for v in members:
                coords = list(sub.coords_of(v))
                coords.insert(drop, anchor)
                flat = factors.flat_index(coords)
                if flat not in seen:
                    seen.add(flat)
                    out.append(flat)
    if len(out) > 3 * sum(block_sizes):
        raise AssertionError("construction exceeded its size bound")
    return _certified(out, factors)


def lower_bound_two_cliques(m: int, n: int) -> int:
    """ceil(2(m + n - 2) / 3), valid for 3 <= m <= n <= 2m - 2."""
    if not (3 <= m <= n <= 2 * m - 2):
        raise ValueError(f"needs 3 <= m <= n <= 2m - 2, got ({m}, {n})")
    return -(-2 * (m + n - 2) // 3)
