# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels mirroring ``_pykernels``.

The subset search scans all bitmasks with C-level feasibility checks; ties
on size resolve to the lexicographically smallest index set (at the lowest
differing bit, the set having the bit wins).  Results must match the pure
Python backend bit for bit.
"""
from libc.stdlib cimport malloc, free

MODE_INDEPENDENT = 0
MODE_BIPARTITE = 1
MODE_TRIANGLE_FREE = 2

BACKEND = "c"

DEF MAX_SCAN_N = 25


cdef inline int popcount(unsigned long long x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int lowbit_index(unsigned long long x):
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef bint _independent(unsigned long long *adj, unsigned long long mask):
    cdef unsigned long long m = mask
    cdef int v
    while m:
        v = lowbit_index(m & (~m + 1))
        m &= m - 1
        if adj[v] & mask:
            return False
    return True


cdef bint _triangle_free(unsigned long long *adj, unsigned long long mask):
    cdef unsigned long long m = mask, mu
    cdef int v, u
    while m:
        v = lowbit_index(m & (~m + 1))
        m &= m - 1
        mu = adj[v] & m
        while mu:
            u = lowbit_index(mu & (~mu + 1))
            mu &= mu - 1
            if adj[v] & adj[u] & mask:
                return False
    return True


cdef bint _bipartite(unsigned long long *adj, unsigned long long mask):
    cdef unsigned long long colored = 0, side_a = 0, side_b = 0
    cdef unsigned long long s, f, nf, m
    cdef int v, side
    while colored != mask:
        s = (mask & ~colored)
        s &= ~s + 1
        side_a |= s
        colored |= s
        f = s
        side = 0
        while f:
            nf = 0
            m = f
            while m:
                v = lowbit_index(m & (~m + 1))
                m &= m - 1
                nf |= adj[v]
            nf &= mask & ~colored
            side ^= 1
            if side:
                side_b |= nf
            else:
                side_a |= nf
            colored |= nf
            f = nf
    m = mask
    while m:
        v = lowbit_index(m & (~m + 1))
        m &= m - 1
        if (side_a >> v) & 1:
            if adj[v] & side_a:
                return False
        else:
            if adj[v] & side_b:
                return False
    return True


cdef bint _feasible(unsigned long long *adj, unsigned long long mask, int mode):
    if mode == 0:
        return _independent(adj, mask)
    if mode == 1:
        return _bipartite(adj, mask)
    return _triangle_free(adj, mask)


cdef unsigned long long *_load_masks(object masks, int n) except NULL:
    cdef unsigned long long *adj = <unsigned long long *> malloc(
        n * sizeof(unsigned long long))
    if adj == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        adj[i] = masks[i]
    return adj


cdef inline bint _lex_less(unsigned long long a, unsigned long long b):
    # Equal-cardinality sets: smaller at the lowest differing bit wins.
    cdef unsigned long long d = a ^ b
    if d == 0:
        return False
    d &= ~d + 1
    return (a & d) != 0


def max_subset(masks, int mode):
    """(size, subset_bitmask) of the largest feasible subset, lex-min ties."""
    cdef int n = len(masks)
    if n > MAX_SCAN_N:
        raise ValueError(f"compiled subset scan limited to n <= {MAX_SCAN_N}")
    cdef unsigned long long *adj = _load_masks(masks, n)
    cdef unsigned long long best_mask = 0, mask
    cdef int best = 0, size
    cdef unsigned long long total = (<unsigned long long> 1) << n
    try:
        for mask in range(1, total):
            size = popcount(mask)
            if size < best:
                continue
            if size == best and not _lex_less(mask, best_mask):
                continue
            if _feasible(adj, mask, mode):
                best = size
                best_mask = mask
        return best, best_mask
    finally:
        free(adj)


def subset_feasible(masks, mask, int mode):
    cdef int n = len(masks)
    if n > 64:
        raise ValueError("compiled feasibility check limited to n <= 64")
    cdef unsigned long long *adj = _load_masks(masks, n)
    try:
        return bool(_feasible(adj, mask, mode))
    finally:
        free(adj)


def chain_mbs(masks):
    """Max triangle-free chain DP; see the Python backend for the contract."""
    cdef int n = len(masks)
    if n < 3:
        return 0, []
    if n > 64:
        raise ValueError("compiled chain DP limited to n <= 64")
    cdef unsigned long long *adj = _load_masks(masks, n)
    cdef int *B = <int *> malloc(n * n * n * sizeof(int))
    cdef int *nxt = <int *> malloc(n * n * n * sizeof(int))
    if B == NULL or nxt == NULL:
        if B != NULL:
            free(B)
        if nxt != NULL:
            free(nxt)
        free(adj)
        raise MemoryError()
    cdef int i, j, k, l, best, best_l, v
    cdef int gbest = 0, gi = -1, gj = -1, gk = -1
    try:
        for i in range(n - 1, -1, -1):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if ((adj[i] >> j) & 1) and ((adj[i] >> k) & 1) \
                            and ((adj[j] >> k) & 1):
                        B[(i * n + j) * n + k] = 0
                        nxt[(i * n + j) * n + k] = -1
                        continue
                    best = 3
                    best_l = -1
                    for l in range(k + 1, n):
                        if ((adj[i] >> j) & 1) and ((adj[i] >> l) & 1) \
                                and ((adj[j] >> l) & 1):
                            continue
                        if ((adj[i] >> k) & 1) and ((adj[i] >> l) & 1) \
                                and ((adj[k] >> l) & 1):
                            continue
                        if ((adj[j] >> k) & 1) and ((adj[j] >> l) & 1) \
                                and ((adj[k] >> l) & 1):
                            continue
                        v = 1 + B[(j * n + k) * n + l]
                        if v > best:
                            best = v
                            best_l = l
                    B[(i * n + j) * n + k] = best
                    nxt[(i * n + j) * n + k] = best_l
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if B[(i * n + j) * n + k] > gbest:
                        gbest = B[(i * n + j) * n + k]
                        gi, gj, gk = i, j, k
        if gi < 0:
            return 0, []
        chain = [gi, gj, gk]
        i, j, k = gi, gj, gk
        while nxt[(i * n + j) * n + k] >= 0:
            l = nxt[(i * n + j) * n + k]
            chain.append(l)
            i, j, k = j, k, l
        return gbest, chain
    finally:
        free(B)
        free(nxt)
        free(adj)


def has_induced_cycle_at_least(masks, int min_len):
    cdef int n = len(masks)
    if n > MAX_SCAN_N:
        raise ValueError(f"compiled cycle scan limited to n <= {MAX_SCAN_N}")
    cdef unsigned long long *adj = _load_masks(masks, n)
    cdef unsigned long long mask, m, seen, frontier, nf
    cdef unsigned long long total = (<unsigned long long> 1) << n
    cdef int v
    cdef bint ok
    try:
        for mask in range(1, total):
            if popcount(mask) < min_len:
                continue
            ok = True
            m = mask
            while m:
                v = lowbit_index(m & (~m + 1))
                m &= m - 1
                if popcount(adj[v] & mask) != 2:
                    ok = False
                    break
            if not ok:
                continue
            seen = mask & (~mask + 1)
            frontier = seen
            while frontier:
                nf = 0
                m = frontier
                while m:
                    v = lowbit_index(m & (~m + 1))
                    m &= m - 1
                    nf |= adj[v]
                nf &= mask & ~seen
                seen |= nf
                frontier = nf
            if seen == mask:
                return True
        return False
    finally:
        free(adj)
