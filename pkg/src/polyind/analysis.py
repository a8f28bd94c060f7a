"""Decision procedures: planarity, connectivity, distances, independence."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field

import networkx as nx
import numpy as np

from . import accel
from .core import ColoredGraph, Embedding, Graph, GraphError, faces

MIS_MAX_N = 64


class UnsupportedSizeError(ValueError):
    """The exact solvers only cover graphs with at most ``MIS_MAX_N`` vertices."""


class DisconnectedGraphError(GraphError):
    def __init__(self, components):
        self.components = components
        super().__init__(f"graph is disconnected; components: {components}")


def _unmask(mask: int) -> list[int]:
    mask = accel.to_unsigned(mask)
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _kernel_adj(g: Graph):
    k = accel.kernels()
    return k, accel.as_masks(g.masks, k.jit)


def _distances(g: Graph) -> np.ndarray:
    k = accel.kernels()
    indptr, indices = g.csr
    return np.asarray(k.bfs_distances(indptr, indices, g.n))


def is_planar(g: Graph) -> tuple[bool, Embedding | None]:
    """Planarity test returning a rotation system when planar.

    Graphs with more than ``3n - 6`` edges are rejected before running the
    left-right planarity test.
    """
    if g.n >= 3 and g.q > 3 * g.n - 6:
        return False, None
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(nxg)
    if not ok:
        return False, None
    data = emb.get_data()
    return True, Embedding(g, [data.get(v, []) for v in range(g.n)])


def embed(g: Graph) -> Embedding:
    ok, e = is_planar(g)
    if not ok:
        raise GraphError(f"graph with p={g.p}, q={g.q} is not planar")
    return e


def is_k_connected(g: Graph, t: int) -> tuple[bool, list[int] | None]:
    """True iff no vertex set of size < t separates ``g``; else a minimum cut."""
    if t not in (1, 2, 3):
        raise ValueError(f"connectivity level must be 1, 2 or 3, got {t}")
    if g.n <= t:
        raise GraphError(f"{t}-connectivity needs more than {t} vertices, got {g.n}")
    k = accel.kernels()
    indptr, indices = g.csr
    size, u, v = k.vertex_cut(indptr, indices, g.n, t)
    if size < 0:
        return True, None
    return False, [int(x) for x in (u, v)[:size]]


@dataclass
class VerificationReport:
    simple: bool = True
    planar: bool = False
    three_connected: bool = False
    polyhedral: bool = False
    certificate_valid: bool = False
    order: int = 0
    edges: int = 0
    k: int | None = None
    red_size: int | None = None
    independence: int | None = None
    expected_order: int | None = None
    cut_witness: list[int] | None = None
    close_pair: list[int] | None = None
    close_pair_distance: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def is_polyhedral(g: Graph) -> VerificationReport:
    rep = VerificationReport(order=g.p, edges=g.q)
    if g.n < 4:
        rep.notes.append(f"order {g.n} < 4")
        return rep
    rep.planar, _ = is_planar(g)
    if not rep.planar:
        rep.notes.append("planarity test rejected the graph"
                         + (" (q > 3p - 6)" if g.q > 3 * g.n - 6 else ""))
    rep.three_connected, rep.cut_witness = is_k_connected(g, 3)
    rep.polyhedral = rep.simple and rep.planar and rep.three_connected
    return rep


def all_pairs_distances(g: Graph) -> np.ndarray:
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    dist = _distances(g)
    if (dist < 0).any():
        raise DisconnectedGraphError(g.components())
    return dist


@dataclass
class ShellDecomposition:
    source: int
    shells: list[list[int]]
    remainder: list[int]

    def shell(self, d: int) -> list[int]:
        return self.shells[d - 1]

    def sizes(self) -> list[int]:
        return [len(s) for s in self.shells]


def distance_shells(g: Graph, x: int, limit: int) -> ShellDecomposition:
    dist = all_pairs_distances(g)[x]
    shells = [sorted(int(v) for v in np.flatnonzero(dist == d)) for d in range(1, limit + 1)]
    rest = sorted(int(v) for v in np.flatnonzero(dist > limit))
    return ShellDecomposition(x, shells, rest)


def graph_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise ValueError(f"power must be at least 1, got {k}")
    dist = all_pairs_distances(g)
    iu, ju = np.nonzero(np.triu((dist >= 1) & (dist <= k)))
    return Graph(g.n, zip(iu.tolist(), ju.tolist()))


def _check_size(g: Graph) -> None:
    if g.n > MIS_MAX_N:
        raise UnsupportedSizeError(f"unsupported size: exact solver handles n <= {MIS_MAX_N}, got {g.n}")


def max_independent_set(g: Graph) -> list[int]:
    _check_size(g)
    if g.n == 0:
        return []
    k, adj = _kernel_adj(g)
    return _unmask(k.max_independent_mask(adj, g.n))


def _power_masks(g: Graph, kk: int):
    k = accel.kernels()
    dist = all_pairs_distances(g)
    return k, k.power_masks(dist, g.n, kk)


def max_k_independent_set(g: Graph, k: int) -> list[int]:
    _check_size(g)
    if g.n == 0:
        return []
    kern, padj = _power_masks(g, k)
    if not kern.jit:
        padj = [accel.to_unsigned(m) for m in padj]
    return _unmask(kern.max_independent_mask(padj, g.n))


def k_independence_number(g: Graph, k: int) -> int:
    """Size of a largest vertex set with pairwise distances above ``k``."""
    return len(max_k_independent_set(g, k))


def verify_certificate(c: ColoredGraph, measure: bool = False) -> VerificationReport:
    """Check that the red set is k-independent in a polyhedral graph.

    With ``measure`` the exact k-independence number is recorded as well
    (only for graphs inside the solver envelope).
    """
    from .constructions import p_formula

    g = c.graph
    rep = is_polyhedral(g)
    rep.k = c.k
    rep.red_size = len(c.red)
    if c.red:
        rep.expected_order = p_formula(c.k, len(c.red))
    reds = sorted(c.red)
    close_ok = True
    if g.n and g.is_connected():
        dist = all_pairs_distances(g)
        for u, v in itertools.combinations(reds, 2):
            if dist[u, v] <= c.k:
                rep.close_pair = [u, v]
                rep.close_pair_distance = int(dist[u, v])
                rep.notes.append(f"red vertices {u} and {v} at distance {int(dist[u, v])} <= k={c.k}")
                close_ok = False
                break
        if measure and g.n <= MIS_MAX_N:
            rep.independence = k_independence_number(g, c.k)
    else:
        close_ok = len(reds) <= 1
        rep.notes.append("graph is disconnected")
    rep.certificate_valid = rep.polyhedral and close_ok
    if rep.certificate_valid:
        object.__setattr__(c, "_certified", True)
    return rep


def has_separating_quadrilateral(e: Embedding | Graph) -> tuple[bool, list[int] | None]:
    """Search for a 4-cycle whose removal leaves at least two components."""
    g = e.graph if isinstance(e, Embedding) else e
    if g.n < 6:
        return False, None
    k = accel.kernels()
    indptr, indices = g.csr
    out = [int(x) for x in k.separating_4cycle(indptr, indices, g.n)]
    if out[0] < 0:
        return False, None
    return True, out


def is_quadrangulation(e: Embedding) -> bool:
    fs = faces(e)
    quad = all(len(f) == 4 for f in fs)
    if quad and e.graph.q != 2 * e.graph.p - 4:
        raise GraphError(f"all faces are quadrilaterals but q={e.graph.q} != 2p-4")
    return quad


def is_maximal_planar(g: Graph) -> bool:
    if g.n < 3 or g.q != 3 * g.n - 6:
        return False
    return is_planar(g)[0]
