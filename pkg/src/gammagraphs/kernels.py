"""Bit-mask kernels for domination and gamma-graph construction.

All masks are ``uint64``; vertex ``v`` is bit ``v``.  ``closed[v]`` is the
closed neighbourhood N[v] of vertex ``v``.  Only typed constants are mixed
into mask arithmetic so numba never promotes to float.
"""

import numpy as np

from ._accel import USE_NUMBA, jit

ZERO = np.uint64(0)
ONE = np.uint64(1)


@jit
def popcount(x):
    c = 0
    while x != ZERO:
        x &= x - ONE
        c += 1
    return c


@jit
def bit_index(x):
    """Index of the lowest set bit of a nonzero mask."""
    i = 0
    while (x & ONE) == ZERO:
        x >>= ONE
        i += 1
    return i


@jit
def _full_mask(n):
    if n >= 64:
        return ~ZERO
    return (ONE << np.uint64(n)) - ONE


@jit
def _expand(closed, n, full, dominated, excluded, k):
    """Classify a search node: 1 solved, 0 dead, 2 branch on the returned mask."""
    if dominated == full:
        return 1, ZERO
    if k == 0:
        return 0, ZERO
    und = full & ~dominated
    cover = 0
    for u in range(n):
        if (excluded >> np.uint64(u)) & ONE:
            continue
        c = popcount(closed[u] & und)
        if c > cover:
            cover = c
    if popcount(und) > k * cover:
        return 0, ZERO
    # branch on the undominated vertex with the fewest remaining dominators
    best_count = n + 1
    best_cand = ZERO
    rest = und
    while rest != ZERO:
        low = rest & (~rest + ONE)
        cand = closed[bit_index(low)] & ~excluded
        c = popcount(cand)
        if c < best_count:
            best_count = c
            best_cand = cand
            if c <= 1:
                break
        rest ^= low
    if best_count == 0:
        return 0, ZERO
    return 2, best_cand


@jit
def _dominates_within(closed, n, full, k):
    """Is there a dominating set with at most k vertices?"""
    status, cand0 = _expand(closed, n, full, ZERO, ZERO, k)
    if status != 2:
        return status == 1
    dom = np.zeros(k + 1, dtype=np.uint64)
    excl = np.zeros(k + 1, dtype=np.uint64)
    cand = np.zeros(k + 1, dtype=np.uint64)
    cand[0] = cand0
    d = 0
    while d >= 0:
        if cand[d] == ZERO:
            d -= 1
            continue
        low = cand[d] & (~cand[d] + ONE)
        cand[d] ^= low
        ndom = dom[d] | closed[bit_index(low)]
        # sets through this vertex are exhausted by its subtree
        excl[d] |= low
        status, c = _expand(closed, n, full, ndom, excl[d], k - d - 1)
        if status == 1:
            return True
        if status == 2:
            d += 1
            dom[d] = ndom
            excl[d] = excl[d - 1]
            cand[d] = c
    return False


@jit
def min_dominating_size(closed, n):
    """Domination number by iterative deepening branch and bound."""
    if n == 0:
        return 0
    full = _full_mask(n)
    for k in range(n + 1):
        if _dominates_within(closed, n, full, k):
            return k
    return n


@jit
def _feasible(closed, full, dominated, start, r, suffix_max):
    und = full & ~dominated
    if und == ZERO:
        return True
    if popcount(und) > r * suffix_max[start]:
        return False
    # every undominated vertex needs a dominator at index >= start
    reachable = full & ~((ONE << np.uint64(start)) - ONE)
    rest = und
    while rest != ZERO:
        low = rest & (~rest + ONE)
        if (closed[bit_index(low)] & reachable) == ZERO:
            return False
        rest ^= low
    return True


@jit
def dominating_sets_of_size(closed, n, k, out):
    """Write every dominating k-subset into ``out``; return the total count.

    Sets are produced in lexicographic order of their sorted index tuples.
    When the count exceeds ``len(out)`` only the prefix is written and the
    caller is expected to retry with a larger buffer.
    """
    full = _full_mask(n) if n > 0 else ZERO
    if k == 0:
        if full == ZERO:
            if out.shape[0] > 0:
                out[0] = ZERO
            return 1
        return 0
    if k > n:
        return 0
    suffix_max = np.zeros(n + 1, dtype=np.int64)
    for j in range(n - 1, -1, -1):
        c = popcount(closed[j])
        suffix_max[j] = c if c > suffix_max[j + 1] else suffix_max[j + 1]
    idx = np.zeros(k, dtype=np.int64)
    dom = np.zeros(k, dtype=np.uint64)
    chosen = np.zeros(k, dtype=np.uint64)
    count = 0
    d = 0
    idx[0] = -1
    while d >= 0:
        idx[d] += 1
        j = idx[d]
        r = k - d
        # both cut-offs only tighten as j grows, so failing ends this depth
        if j > n - r or not _feasible(closed, full, dom[d], j, r, suffix_max):
            d -= 1
            continue
        cur = dom[d] | closed[j]
        pick = chosen[d] | (ONE << np.uint64(j))
        if r == 1:
            if cur == full:
                if count < out.shape[0]:
                    out[count] = pick
                count += 1
            continue
        d += 1
        dom[d] = cur
        chosen[d] = pick
        idx[d] = j
    return count


@jit
def reconfiguration_edges(sets, adj, slide, out):
    """Pairs (i, j), i < j, of equal-size sets differing in one element.

    With ``slide`` set the two swapped vertices must also be adjacent.
    Fills ``out`` (shape (m, 2)) and returns the number of pairs found.
    """
    k = sets.shape[0]
    count = 0
    for i in range(k):
        a = sets[i]
        for j in range(i + 1, k):
            b = sets[j]
            if popcount(a ^ b) != 2:
                continue
            if slide:
                x = a & ~b
                y = b & ~a
                if (adj[bit_index(x)] & y) == ZERO:
                    continue
            if count < out.shape[0]:
                out[count, 0] = i
                out[count, 1] = j
            count += 1
    return count


def _reconfiguration_edges_numpy(sets, adj, slide):
    k = sets.shape[0]
    i, j = np.triu_indices(k, 1)
    a, b = sets[i], sets[j]
    keep = np.bitwise_count(a ^ b) == 2
    if slide and keep.any():
        i, j, a, b = i[keep], j[keep], a[keep], b[keep]
        x_index = np.bitwise_count((a & ~b) - ONE).astype(np.intp)
        keep = (adj[x_index] & (b & ~a)) != ZERO
    return np.stack([i[keep], j[keep]], axis=1).astype(np.int64)


def closed_masks(adj):
    """uint64 array of closed neighbourhoods from open-neighbourhood masks."""
    n = len(adj)
    out = np.array([int(m) for m in adj], dtype=np.uint64)
    if n:
        out |= ONE << np.arange(n, dtype=np.uint64)
    return out


def domination_number(closed):
    return int(min_dominating_size(closed, closed.shape[0]))


def dominating_sets(closed, k):
    """Sorted uint64 array of all dominating sets with exactly ``k`` vertices."""
    n = closed.shape[0]
    out = np.zeros(64, dtype=np.uint64)
    count = dominating_sets_of_size(closed, n, k, out)
    if count > out.shape[0]:
        out = np.zeros(count, dtype=np.uint64)
        dominating_sets_of_size(closed, n, k, out)
    return np.sort(out[:count])


def gamma_edges(sets, adj, slide):
    """(m, 2) int64 array of reconfiguration edges in row-major pair order."""
    sets = np.asarray(sets, dtype=np.uint64)
    adj = np.asarray(adj, dtype=np.uint64)
    if not USE_NUMBA:
        return _reconfiguration_edges_numpy(sets, adj, slide)
    k = sets.shape[0]
    out = np.zeros((4 * k + 16, 2), dtype=np.int64)
    count = reconfiguration_edges(sets, adj, slide, out)
    if count > out.shape[0]:
        out = np.zeros((count, 2), dtype=np.int64)
        reconfiguration_edges(sets, adj, slide, out)
    return out[:count]
