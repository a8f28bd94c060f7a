"""Graph kernels.

Every function here is written in the subset of Python that numba's nopython
mode accepts, so :mod:`polyind.accel` can either compile it or call it as-is.

Two graph encodings are used.  Traversal kernels take CSR adjacency
(``indptr``, ``indices``) and work for any order.  The independent-set
solver takes ``adj``, one neighbour bitmask per vertex, so it is limited to
64 vertices; under numba bit 63 is the int64 sign bit, which is why its loops
test ``x != 0`` rather than ``x > 0``.
"""

import numpy as np


def popcount(x):
    c = 0
    while x != 0:
        x &= x - 1
        c += 1
    return c


def lowbit_index(x):
    # x must be non-zero
    i = 0
    while (x >> i) & 1 == 0:
        i += 1
    return i


def full_mask(n):
    m = 0
    for i in range(n):
        m |= 1 << i
    return m


def _bfs_order(indptr, indices, n, removed, start, dist, queue):
    # fills dist (-1 = unreached) from start, skipping removed vertices; returns #reached
    for i in range(n):
        dist[i] = -1
    dist[start] = 0
    queue[0] = start
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if dist[u] < 0 and not removed[u]:
                dist[u] = dist[v] + 1
                queue[tail] = u
                tail += 1
    return tail


def connected_without(indptr, indices, n, removed):
    """True when the graph minus the flagged vertices is connected."""
    start = -1
    alive = 0
    for v in range(n):
        if not removed[v]:
            alive += 1
            if start < 0:
                start = v
    if alive <= 1:
        return True
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    return _bfs_order(indptr, indices, n, removed, start, dist, queue) == alive


def vertex_cut(indptr, indices, n, t):
    """Search for a separating vertex set of size < t, smallest first.

    Returns ``(size, u, v)``: size -1 when none exists, 0 when the graph is
    already disconnected, otherwise the cut is ``u`` (and ``v``).
    """
    removed = np.zeros(n, dtype=np.bool_)
    if not connected_without(indptr, indices, n, removed):
        return 0, -1, -1
    if t >= 2:
        for u in range(n):
            removed[u] = True
            if not connected_without(indptr, indices, n, removed):
                return 1, u, -1
            removed[u] = False
    if t >= 3:
        for u in range(n):
            removed[u] = True
            for v in range(u + 1, n):
                removed[v] = True
                if not connected_without(indptr, indices, n, removed):
                    return 2, u, v
                removed[v] = False
            removed[u] = False
    return -1, -1, -1


def bfs_distances(indptr, indices, n):
    """All-pairs hop distances; -1 marks unreachable pairs."""
    dist = np.full((n, n), -1, dtype=np.int64)
    removed = np.zeros(n, dtype=np.bool_)
    row = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        _bfs_order(indptr, indices, n, removed, s, row, queue)
        for v in range(n):
            dist[s, v] = row[v]
    return dist


def power_masks(dist, n, k):
    """Bitmask adjacency of the k-th power from a distance matrix (n <= 64)."""
    out = np.zeros(n, dtype=np.int64)
    for u in range(n):
        m = 0
        for v in range(n):
            d = dist[u, v]
            if d >= 1 and d <= k:
                m |= 1 << v
        out[u] = m
    return out


def _clique_cover_bound(adj, p):
    # Greedy partition of p into cliques; any independent set meets each at most once.
    count = 0
    rest = p
    while rest != 0:
        v = lowbit_index(rest)
        cand = rest & adj[v]
        rest &= ~(1 << v)
        while cand != 0:
            u = lowbit_index(cand)
            rest &= ~(1 << u)
            cand &= adj[u]
        count += 1
    return count


def max_independent_mask(adj, n):
    """Bitmask of a maximum independent set (exact branch and bound).

    Depth-first over (candidates, size, chosen) states kept on an explicit
    stack; the include branch is explored before the exclude branch.
    """
    zero = 0
    best_size = -1
    best_mask = zero
    stack = [(full_mask(n), 0, zero)]
    while len(stack) > 0:
        p, size, cur = stack.pop()
        while True:
            if p == 0:
                if size > best_size:
                    best_size = size
                    best_mask = cur
                break
            if size + _clique_cover_bound(adj, p) <= best_size:
                break
            # a vertex of degree <= 1 inside p can always be taken
            forced = -1
            pick = -1
            pick_deg = -1
            f = p
            while f != 0:
                v = lowbit_index(f)
                f &= f - 1
                d = popcount(adj[v] & p)
                if d <= 1:
                    forced = v
                    break
                if d > pick_deg:
                    pick_deg = d
                    pick = v
            if forced >= 0:
                bit = 1 << forced
                p = p & ~adj[forced] & ~bit
                size += 1
                cur |= bit
                continue
            bit = 1 << pick
            stack.append((p & ~bit, size, cur))
            p = p & ~adj[pick] & ~bit
            size += 1
            cur |= bit
    return best_mask


def separating_4cycle(indptr, indices, n):
    """Find a 4-cycle whose vertex removal disconnects the rest.

    Cycles u-v-w-x are enumerated from pairs (u, w) with two common
    neighbours.  Returns the cycle as a length-4 array, or -1 entries.
    """
    out = np.full(4, -1, dtype=np.int64)
    mark = np.zeros(n, dtype=np.bool_)
    removed = np.zeros(n, dtype=np.bool_)
    common = np.empty(n, dtype=np.int64)
    for u in range(n):
        for j in range(indptr[u], indptr[u + 1]):
            mark[indices[j]] = True
        for w in range(u + 1, n):
            nc = 0
            for j in range(indptr[w], indptr[w + 1]):
                if mark[indices[j]]:
                    common[nc] = indices[j]
                    nc += 1
            for i1 in range(nc):
                for i2 in range(i1 + 1, nc):
                    v = common[i1]
                    x = common[i2]
                    if n - 4 < 2:
                        continue
                    removed[u] = True
                    removed[v] = True
                    removed[w] = True
                    removed[x] = True
                    split = not connected_without(indptr, indices, n, removed)
                    removed[u] = False
                    removed[v] = False
                    removed[w] = False
                    removed[x] = False
                    if split:
                        out[0] = u
                        out[1] = v
                        out[2] = w
                        out[3] = x
                        return out
        for j in range(indptr[u], indptr[u + 1]):
            mark[indices[j]] = False
    return out


def refine_colors(indptr, indices, n, colors):
    """Equitable refinement of a vertex colouring.

    ``colors`` holds ranks 0..c-1.  Each round re-ranks vertices by
    (own colour, sorted neighbour colours); returns the stable colouring and
    a hash of every round's signature list, which is invariant under
    relabelling and is used to prune the canonical-labelling search.
    """
    col = colors.copy()
    trace = 17
    ncol = 0
    for v in range(n):
        if col[v] + 1 > ncol:
            ncol = col[v] + 1
    sig = np.zeros((n, n + 1), dtype=np.int64)
    while True:
        for v in range(n):
            sig[v, 0] = col[v]
            cnt = np.zeros(n, dtype=np.int64)
            for j in range(indptr[v], indptr[v + 1]):
                cnt[col[indices[j]]] += 1
            for c in range(n):
                sig[v, c + 1] = cnt[c]
        order = np.arange(n)
        # insertion sort of vertices by signature rows (n is small)
        for i in range(1, n):
            j = i
            while j > 0 and _row_less(sig, order[j], order[j - 1], n + 1):
                tmp = order[j]
                order[j] = order[j - 1]
                order[j - 1] = tmp
                j -= 1
        new = np.zeros(n, dtype=np.int64)
        rank = 0
        new[order[0]] = 0
        for i in range(1, n):
            if _row_less(sig, order[i - 1], order[i], n + 1):
                rank += 1
            new[order[i]] = rank
        for i in range(n):
            r = order[i]
            for c in range(n + 1):
                trace = (trace * 31 + sig[r, c] + 1) % 2147483647
        if rank + 1 == ncol:
            return new, trace
        ncol = rank + 1
        col = new


def _row_less(sig, a, b, width):
    for c in range(width):
        if sig[a, c] < sig[b, c]:
            return True
        if sig[a, c] > sig[b, c]:
            return False
    return False
