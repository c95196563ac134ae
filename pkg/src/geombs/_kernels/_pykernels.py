"""Pure-Python kernels: exhaustive subset search and the chain DP.

Adjacency is passed as a list of neighbor bitmasks (``masks[v] >> u & 1``
iff u and v are adjacent).  The compiled backend in ``_ckernels.pyx``
implements the same contracts; both must return identical results.
"""
from itertools import combinations

MODE_INDEPENDENT = 0
MODE_BIPARTITE = 1
MODE_TRIANGLE_FREE = 2

BACKEND = "python"


def _edge_witness(masks, mask):
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        hit = masks[v] & mask
        if hit:
            u = (hit & -hit).bit_length() - 1
            return (1 << v) | (1 << u)
    return None


def _triangle_witness(masks, mask):
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        mu = masks[v] & m
        while mu:
            u = (mu & -mu).bit_length() - 1
            mu &= mu - 1
            common = masks[v] & masks[u] & mask
            if common:
                w = (common & -common).bit_length() - 1
                return (1 << v) | (1 << u) | (1 << w)
    return None


def _odd_cycle_witness(masks, mask):
    """Bitmask of one odd cycle in the induced subgraph, or None."""
    color = {}
    parent = {}
    rem = mask
    while rem:
        root = (rem & -rem).bit_length() - 1
        color[root] = 0
        parent[root] = None
        stack = [root]
        while stack:
            u = stack.pop()
            m = masks[u] & mask
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if v not in color:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    stack.append(v)
                elif color[v] == color[u]:
                    pu = set()
                    w = u
                    while w is not None:
                        pu.add(w)
                        w = parent[w]
                    w = v
                    path_v = []
                    while w not in pu:
                        path_v.append(w)
                        w = parent[w]
                    meet = w
                    cyc = 1 << meet
                    for x in path_v:
                        cyc |= 1 << x
                    w = u
                    while w != meet:
                        cyc |= 1 << w
                        w = parent[w]
                    return cyc
        for v in color:
            rem &= ~(1 << v)
    return None


_WITNESS = {
    MODE_INDEPENDENT: _edge_witness,
    MODE_BIPARTITE: _odd_cycle_witness,
    MODE_TRIANGLE_FREE: _triangle_witness,
}


def max_subset(masks, mode):
    """Largest feasible subset; ties resolved to the lexicographically
    smallest index set.  Enumerates subsets in decreasing size with
    supersets of known infeasibility witnesses pruned.

    Returns (size, subset_bitmask).
    """
    n = len(masks)
    witness = _WITNESS[mode]
    bad = []
    for k in range(n, 0, -1):
        for combo in combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any(mask & w == w for w in bad):
                continue
            w = witness(masks, mask)
            if w is None:
                return k, mask
            if w not in bad:
                bad.append(w)
    return 0, 0


def subset_feasible(masks, mask, mode):
    return _WITNESS[mode](masks, mask) is None


def chain_mbs(masks):
    """Max triangle-free chain DP over x-ordered adjacency masks.

    Implements the three-case B[i,j,k] recurrence (0 on triangles; 3 when no
    extension exists; else 1 + best extension) and returns
    (size, selected index list) where size is 0 if no K3-free triple exists.
    """
    n = len(masks)
    if n < 3:
        return 0, []

    def tri(a, b, c):
        return (
            masks[a] >> b & 1 and masks[a] >> c & 1 and masks[b] >> c & 1
        )

    B = {}
    nxt = {}
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if tri(i, j, k):
                    B[i, j, k] = 0
                    continue
                best, best_l = 3, None
                for l in range(k + 1, n):
                    if tri(i, j, l) or tri(i, k, l) or tri(j, k, l):
                        continue
                    v = 1 + B[j, k, l]
                    if v > best:
                        best, best_l = v, l
                B[i, j, k] = best
                nxt[i, j, k] = best_l

    best, start = 0, None
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if B[i, j, k] > best:
                    best, start = B[i, j, k], (i, j, k)
    if start is None:
        return 0, []
    i, j, k = start
    chain = [i, j, k]
    while nxt.get((i, j, k)) is not None:
        l = nxt[i, j, k]
        chain.append(l)
        i, j, k = j, k, l
    return best, chain


def has_induced_cycle_at_least(masks, min_len):
    """True iff some induced subgraph is a cycle of length >= min_len."""
    n = len(masks)
    for mask in range(1, 1 << n):
        if bin(mask).count("1") < min_len:
            continue
        ok = True
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if bin(masks[v] & mask).count("1") != 2:
                ok = False
                break
        if not ok:
            continue
        # connectivity
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            nf = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nf |= masks[v] & mask
            nf &= ~seen
            seen |= nf
            frontier = nf
        if seen == mask:
            return True
    return False
