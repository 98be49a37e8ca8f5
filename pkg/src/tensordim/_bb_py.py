"""Hitting-set search kernel, pure-Python edition.

Same contract as the compiled module `_bb`; selected at import time when the
extension is unavailable.  Each pair of vertices that must be told apart
contributes one mask of "resolver" bits; a solution is a set of vertex bits
hitting every mask.  All masks fit one machine word (at most 64 vertices).

`min_hitting_size` runs branch and bound: branch on the pending mask with
the fewest resolvers (candidates in ascending id, with sibling exclusion so
no subset is explored twice), propagate forced single-resolver picks, and
bound with a greedy disjoint-mask packing.  `lex_min_hitting_set` re-searches
at the known optimum with include-before-exclude over ascending ids, so the
first solution found is the lexicographically least.

Optional factor-value groups prune branches that can no longer touch enough
values of some coordinate: a valid solution in a product of cliques (all
factors >= 3) misses at most one value per factor.
"""

from __future__ import annotations


def _bits_ascending(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _packing_bound(pending: list[int], avail: int) -> int:
    """Count pairwise-disjoint restricted masks; each needs its own pick."""
    union = 0
    count = 0
    for r in sorted((m & avail for m in pending), key=int.bit_count):
        if r & union == 0:
            union |= r
            count += 1
    return count


def _unpack_groups(group_masks, group_offsets) -> list[list[int]]:
    groups: list[list[int]] = []
    offsets = [int(o) for o in group_offsets]
    masks = [int(m) for m in group_masks]
    for f in range(len(offsets) - 1):
        groups.append(masks[offsets[f] : offsets[f + 1]])
    return groups


def _groups_ok(groups: list[list[int]], present: int) -> bool:
    for value_masks in groups:
        missing = 0
        for gm in value_masks:
            if gm & present == 0:
                missing += 1
                if missing >= 2:
                    return False
    return True


def min_hitting_size(
    masks,
    cand_mask: int,
    covered_mask: int,
    lower: int,
    upper: int,
    group_masks=(),
    group_offsets=(0,),
) -> int:
    """Smallest number of candidate bits hitting every mask, capped at upper.

    `lower` must be a valid lower bound; the search stops early once it is
    met.  Returns `upper` when nothing strictly better exists (including the
    infeasible case).  `covered_mask` marks vertices treated as already
    chosen by the factor-group rule only.
    """
    cand_mask = int(cand_mask)
    covered_mask = int(covered_mask)
    pending0 = [int(m) & cand_mask for m in masks]
    groups = _unpack_groups(group_masks, group_offsets)
    if lower >= upper:
        return upper
    best = upper

    def dfs(count: int, chosen: int, avail: int, pending: list[int]) -> None:
        nonlocal best
        # Propagate masks with a single remaining resolver.
        while True:
            if best <= lower:
                return
            if not pending:
                if count < best:
                    best = count
                return
            if count + 1 >= best:
                return
            forced = 0
            branch_mask = 0
            branch_count = 1 << 30
            for m in pending:
                r = m & avail
                if r == 0:
                    return
                c = r.bit_count()
                if c == 1:
                    forced |= r
                elif c < branch_count:
                    branch_count = c
                    branch_mask = r
            if not forced:
                break
            count += forced.bit_count()
            if count >= best:
                return
            chosen |= forced
            avail &= ~forced
            pending = [m for m in pending if m & forced == 0]
        if count + _packing_bound(pending, avail) >= best:
            return
        if groups and not _groups_ok(groups, covered_mask | chosen | avail):
            return
        excluded = 0
        for w in _bits_ascending(branch_mask):
            wb = 1 << w
            dfs(
                count + 1,
                chosen | wb,
                avail & ~excluded & ~wb,
                [m for m in pending if m & wb == 0],
            )
            if best <= lower:
                return
            excluded |= wb

    dfs(0, 0, cand_mask, pending0)
    return best


def lex_min_hitting_set(
    masks,
    cand_mask: int,
    covered_mask: int,
    budget: int,
    group_masks=(),
    group_offsets=(0,),
) -> list[int] | None:
    """First hitting set of size <= budget in lexicographic id order.

    Intended to run at budget == optimum (from min_hitting_size), where the
    result is the lexicographically least minimum solution.  Returns None
    when no solution fits the budget.
    """
    cand_mask = int(cand_mask)
    covered_mask = int(covered_mask)
    cand = _bits_ascending(cand_mask)
    pending0 = [int(m) & cand_mask for m in masks]
    groups = _unpack_groups(group_masks, group_offsets)
    # suffix[i] = bits of all candidates with index >= i
    suffix = [0] * (len(cand) + 1)
    for i in range(len(cand) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << cand[i])

    def dfs(i: int, count: int, chosen: int, pending: list[int]) -> list[int] | None:
        if not pending:
            return []
        if count == budget:
            return None
        avail = suffix[i]
        for m in pending:
            if m & avail == 0:
                return None
        if count + _packing_bound(pending, avail) > budget:
            return None
        if groups and not _groups_ok(groups, covered_mask | chosen | avail):
            return None
        v = cand[i]
        vb = 1 << v
        # Include v first: solutions containing v sort before those without.
        # A pick that hits nothing pending can never appear in a minimum
        # solution, so it is skipped.
        if any(m & vb for m in pending):
            sub = dfs(i + 1, count + 1, chosen | vb, [m for m in pending if m & vb == 0])
            if sub is not None:
                return [v] + sub
        return dfs(i + 1, count, chosen, pending)

    return dfs(0, 0, 0, pending0)
