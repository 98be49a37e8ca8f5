# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Hitting-set search kernel, compiled edition.

Mirrors `_bb_py` exactly: same contract, same branching rules, same results.
See that module for the algorithm description.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef class _Workspace:
    """Scratch buffers shared by one search call."""

    cdef uint64_t* rows          # (depth_cap) * cap_masks pending copies
    cdef uint64_t* restricted    # cap_masks, packing-bound scratch
    cdef int* order              # cap_masks, counting-sort scratch
    cdef int* bucket             # 66 popcount buckets
    cdef uint64_t* gmasks        # flattened factor-value masks
    cdef int* goff               # factor offsets into gmasks
    cdef int n_factors
    cdef int cap_masks
    cdef int depth_cap

    def __cinit__(self, int cap_masks, int depth_cap, group_masks, group_offsets):
        cdef int gtotal = len(group_masks)
        cdef int i
        self.cap_masks = cap_masks if cap_masks > 0 else 1
        self.depth_cap = depth_cap
        self.rows = <uint64_t*> PyMem_Malloc(sizeof(uint64_t) * self.cap_masks * depth_cap)
        self.restricted = <uint64_t*> PyMem_Malloc(sizeof(uint64_t) * self.cap_masks)
        self.order = <int*> PyMem_Malloc(sizeof(int) * self.cap_masks)
        self.bucket = <int*> PyMem_Malloc(sizeof(int) * 66)
        self.gmasks = <uint64_t*> PyMem_Malloc(sizeof(uint64_t) * (gtotal if gtotal else 1))
        self.n_factors = len(group_offsets) - 1
        self.goff = <int*> PyMem_Malloc(sizeof(int) * (self.n_factors + 1))
        if (self.rows == NULL or self.restricted == NULL or self.order == NULL
                or self.bucket == NULL or self.gmasks == NULL or self.goff == NULL):
            raise MemoryError()
        for i in range(gtotal):
            self.gmasks[i] = <uint64_t> int(group_masks[i])
        for i in range(self.n_factors + 1):
            self.goff[i] = int(group_offsets[i])

    def __dealloc__(self):
        PyMem_Free(self.rows)
        PyMem_Free(self.restricted)
        PyMem_Free(self.order)
        PyMem_Free(self.bucket)
        PyMem_Free(self.gmasks)
        PyMem_Free(self.goff)

    cdef int packing_bound(self, uint64_t* pending, int np, uint64_t avail) nogil:
        # Greedy disjoint packing, masks visited in ascending popcount
        # (stable within equal counts), via counting sort.
        cdef int i, c, pos, count
        cdef uint64_t r, union_mask
        for i in range(66):
            self.bucket[i] = 0
        for i in range(np):
            r = pending[i] & avail
            self.restricted[i] = r
            self.bucket[_popcount(r) + 1] += 1
        for i in range(1, 65):
            self.bucket[i] += self.bucket[i - 1]
        for i in range(np):
            c = _popcount(self.restricted[i])
            pos = self.bucket[c]
            self.bucket[c] = pos + 1
            self.order[pos] = i
        union_mask = 0
        count = 0
        for i in range(np):
            r = self.restricted[self.order[i]]
            if r & union_mask == 0:
                union_mask |= r
                count += 1
        return count

    cdef bint groups_ok(self, uint64_t present) nogil:
        cdef int f, i, missing
        for f in range(self.n_factors):
            missing = 0
            for i in range(self.goff[f], self.goff[f + 1]):
                if self.gmasks[i] & present == 0:
                    missing += 1
                    if missing >= 2:
                        return False
        return True


cdef class _SizeSearch:
    cdef _Workspace ws
    cdef uint64_t covered
    cdef int best
    cdef int lower

    cdef void dfs(self, int count, uint64_t chosen, uint64_t avail,
                  uint64_t* pending, int np, int depth) nogil:
        cdef uint64_t forced, branch_mask, r, wb, excluded
        cdef int i, c, branch_count, keep, w
        cdef uint64_t* child
        while True:
            if self.best <= self.lower:
                return
            if np == 0:
                if count < self.best:
                    self.best = count
                return
            if count + 1 >= self.best:
                return
            forced = 0
            branch_mask = 0
            branch_count = 1 << 30
            for i in range(np):
                r = pending[i] & avail
                if r == 0:
                    return
                c = _popcount(r)
                if c == 1:
                    forced |= r
                elif c < branch_count:
                    branch_count = c
                    branch_mask = r
            if forced == 0:
                break
            count += _popcount(forced)
            if count >= self.best:
                return
            chosen |= forced
            avail &= ~forced
            keep = 0
            for i in range(np):
                if pending[i] & forced == 0:
                    pending[keep] = pending[i]
                    keep += 1
            np = keep
        if count + self.ws.packing_bound(pending, np, avail) >= self.best:
            return
        if self.ws.n_factors and not self.ws.groups_ok(self.covered | chosen | avail):
            return
        excluded = 0
        child = self.ws.rows + (depth + 1) * self.ws.cap_masks
        r = branch_mask
        while r:
            w = __builtin_ctzll(r)
            r &= r - 1
            wb = (<uint64_t> 1) << w
            keep = 0
            for i in range(np):
                if pending[i] & wb == 0:
                    child[keep] = pending[i]
                    keep += 1
            self.dfs(count + 1, chosen | wb, avail & ~excluded & ~wb, child, keep, depth + 1)
            if self.best <= self.lower:
                return
            excluded |= wb


def min_hitting_size(masks, cand_mask, covered_mask, lower, upper,
                     group_masks=(), group_offsets=(0,)):
    """Smallest number of candidate bits hitting every mask, capped at upper.

    Same contract as `_bb_py.min_hitting_size`.
    """
    cdef int nm = len(masks)
    cdef int up = int(upper)
    cdef int lo = int(lower)
    if lo >= up:
        return up
    cdef _Workspace ws = _Workspace(nm, up + 2, group_masks, group_offsets)
    cdef _SizeSearch search = _SizeSearch()
    search.ws = ws
    search.covered = <uint64_t> int(covered_mask)
    search.best = up
    search.lower = lo
    cdef uint64_t cand = <uint64_t> int(cand_mask)
    cdef int i
    for i in range(nm):
        ws.rows[i] = (<uint64_t> int(masks[i])) & cand
    search.dfs(0, 0, cand, ws.rows, nm, 0)
    return search.best


cdef class _LexSearch:
    cdef _Workspace ws
    cdef uint64_t covered
    cdef int budget
    cdef int n_cand
    cdef int* cand
    cdef uint64_t* suffix
    cdef int* picks               # chosen ids along the current path

    cdef int dfs(self, int i, int count, uint64_t chosen,
                 uint64_t* pending, int np) nogil:
        # Returns the solution length >= 0, or -1 when the subtree fails.
        cdef uint64_t avail, vb
        cdef int j, keep, v, sub
        cdef bint hits_any
        cdef uint64_t* child
        while True:
            if np == 0:
                return count
            if count == self.budget:
                return -1
            avail = self.suffix[i]
            for j in range(np):
                if pending[j] & avail == 0:
                    return -1
            if count + self.ws.packing_bound(pending, np, avail) > self.budget:
                return -1
            if self.ws.n_factors and not self.ws.groups_ok(self.covered | chosen | avail):
                return -1
            v = self.cand[i]
            vb = (<uint64_t> 1) << v
            hits_any = False
            for j in range(np):
                if pending[j] & vb:
                    hits_any = True
                    break
            if hits_any:
                # include v first
                child = self.ws.rows + (count + 1) * self.ws.cap_masks
                keep = 0
                for j in range(np):
                    if pending[j] & vb == 0:
                        child[keep] = pending[j]
                        keep += 1
                self.picks[count] = v
                sub = self.dfs(i + 1, count + 1, chosen | vb, child, keep)
                if sub >= 0:
                    return sub
            i += 1  # exclude v


def lex_min_hitting_set(masks, cand_mask, covered_mask, budget,
                        group_masks=(), group_offsets=(0,)):
    """First hitting set of size <= budget in lexicographic id order.

    Same contract as `_bb_py.lex_min_hitting_set`.
    """
    cdef int nm = len(masks)
    cdef int bud = int(budget)
    cdef uint64_t cand = <uint64_t> int(cand_mask)
    cdef int n_cand = _popcount(cand)
    cdef _Workspace ws = _Workspace(nm, bud + 2, group_masks, group_offsets)
    cdef _LexSearch search = _LexSearch()
    search.ws = ws
    search.covered = <uint64_t> int(covered_mask)
    search.budget = bud
    search.n_cand = n_cand
    search.cand = <int*> PyMem_Malloc(sizeof(int) * (n_cand + 1))
    search.suffix = <uint64_t*> PyMem_Malloc(sizeof(uint64_t) * (n_cand + 2))
    search.picks = <int*> PyMem_Malloc(sizeof(int) * (bud + 1))
    if search.cand == NULL or search.suffix == NULL or search.picks == NULL:
        PyMem_Free(search.cand)
        PyMem_Free(search.suffix)
        PyMem_Free(search.picks)
        raise MemoryError()
    cdef uint64_t rest = cand
    cdef int i = 0
    while rest:
        search.cand[i] = __builtin_ctzll(rest)
        rest &= rest - 1
        i += 1
    search.suffix[n_cand] = 0
    search.suffix[n_cand + 1] = 0
    for i in range(n_cand - 1, -1, -1):
        search.suffix[i] = search.suffix[i + 1] | ((<uint64_t> 1) << search.cand[i])
    cdef uint64_t* root = ws.rows
    for i in range(nm):
        root[i] = (<uint64_t> int(masks[i])) & cand
    # root pending lives in row 0; include-depth d writes row d + 1
    cdef int found = search.dfs(0, 0, 0, root, nm)
    result = None
    if found >= 0:
        result = [search.picks[i] for i in range(found)]
    PyMem_Free(search.cand)
    PyMem_Free(search.suffix)
    PyMem_Free(search.picks)
    return result
