"""Brute-force reference implementations.

Nothing here calls into polyind's solvers, canonical forms or kernels; graph
structure comes from networkx and plain enumeration so that the package's own
algorithms are checked against a separate route.
"""

from __future__ import annotations

import itertools

import networkx as nx


def to_nx(n, edges) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def distances(n, edges) -> list[list[int]]:
    g = to_nx(n, edges)
    d = dict(nx.all_pairs_shortest_path_length(g))
    return [[d[u].get(v, -1) for v in range(n)] for u in range(n)]


def k_independence_brute(n, edges, k) -> int:
    """Largest subset with pairwise distance > k, by subset enumeration."""
    d = distances(n, edges)
    best = 0
    for mask in range(1 << n):
        verts = [v for v in range(n) if mask >> v & 1]
        if len(verts) <= best:
            continue
        # -1 marks different components, which are infinitely far apart
        if all(d[u][v] > k or d[u][v] < 0 for u, v in itertools.combinations(verts, 2)):
            best = len(verts)
    return best


def isomorphic_by_permutation(n1, e1, n2, e2) -> bool:
    if n1 != n2 or len(set(map(frozenset, e1))) != len(set(map(frozenset, e2))):
        return False
    target = {frozenset(e) for e in e2}
    src = [tuple(e) for e in {frozenset(e) for e in e1}]
    for perm in itertools.permutations(range(n1)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in src):
            return True
    return False


def connectivity_cut_brute(n, edges, t):
    """Smallest vertex set of size < t whose removal disconnects; None if none."""
    g = to_nx(n, edges)
    for size in range(t):
        for cut in itertools.combinations(range(n), size):
            h = g.copy()
            h.remove_nodes_from(cut)
            if h.number_of_nodes() > 1 and not nx.is_connected(h):
                return set(cut)
    return None


def _dedup_count(graphs) -> int:
    buckets: dict[str, list[nx.Graph]] = {}
    count = 0
    for g in graphs:
        key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
            count += 1
    return count


def all_graphs_polyhedra_count(n) -> int:
    """Iso classes of 3-connected planar graphs on n vertices, from all 2^C(n,2) graphs."""
    pairs = list(itertools.combinations(range(n), 2))
    qmin, qmax = (3 * n + 1) // 2, 3 * n - 6
    keep = []
    for q in range(qmin, qmax + 1):
        for chosen in itertools.combinations(pairs, q):
            deg = [0] * n
            for u, v in chosen:
                deg[u] += 1
                deg[v] += 1
            if min(deg) < 3:
                continue
            g = to_nx(n, chosen)
            if nx.node_connectivity(g) < 3 or not nx.check_planarity(g)[0]:
                continue
            keep.append(g)
    return _dedup_count(keep)


def all_graphs_triangulation_count(n) -> int:
    pairs = list(itertools.combinations(range(n), 2))
    keep = []
    for chosen in itertools.combinations(pairs, 3 * n - 6):
        g = to_nx(n, chosen)
        if nx.check_planarity(g)[0]:
            keep.append(g)
    return _dedup_count(keep)
