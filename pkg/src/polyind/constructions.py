"""Extremal polyhedra with k-independent sets and the operations that build them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .analysis import embed, is_k_connected, is_polyhedral
from .core import ColoredGraph, Embedding, Graph, GraphError, dart_faces, faces


class ConstructionError(GraphError):
    pass


def p_formula(k: int, a: int) -> int:
    """Least order of a polyhedron holding a k-independent set of size a."""
    if k < 1 or a < 1:
        raise ValueError(f"k and a must be positive, got k={k}, a={a}")
    if a == 1:
        return 4
    if k % 2 == 0:
        return (3 * k // 2 + 1) * a
    # ceil(3a/2 + 2) written in integers
    return (3 * a + 1) // 2 + 2 + 3 * a * (k - 1) // 2


# ---------------------------------------------------------------- base graphs

def _colored(g: Graph, red, k: int = 1, step: str = "") -> ColoredGraph:
    return ColoredGraph(g, frozenset(red), k, embed(g), (step,) if step else ())


def _cube_edges() -> list[tuple[int, int]]:
    return [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]


def tetrahedron() -> ColoredGraph:
    return _colored(Graph(4, itertools.combinations(range(4), 2)), {0}, step="base:tetrahedron")


def square_pyramid() -> ColoredGraph:
    # apex 4 over the square 0-1-2-3
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)])
    return _colored(g, {0, 2}, step="base:square_pyramid")


def cube() -> ColoredGraph:
    # vertices are 3-bit words; red = even weight
    red = {v for v in range(8) if bin(v).count("1") % 2 == 0}
    return _colored(Graph(8, _cube_edges()), red, step="base:cube")


def g3() -> ColoredGraph:
    """The cube with the edge 000-001 contracted into a blue vertex."""
    relabel = {0: 0, 1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5, 7: 6}
    g = Graph(7, {(relabel[u], relabel[v]) for u, v in _cube_edges() if relabel[u] != relabel[v]})
    red = {relabel[v] for v in (3, 5, 6)}
    return _colored(g, red, step="base:g3")


def pdw10() -> ColoredGraph:
    """Pseudo double wheel: 8-cycle c1..c8 plus hubs on alternate cycle vertices.

    Cycle vertex ci is ``i - 1``; hub u = 8 sees odd ci, hub w = 9 sees even ci.
    """
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(8, i) for i in range(0, 8, 2)]
    edges += [(9, i) for i in range(1, 8, 2)]
    red = {8, 1, 3, 5, 7}
    return _colored(Graph(10, edges), red, step="base:pdw10")


BASE_GRAPHS = {
    "tetrahedron": tetrahedron,
    "square_pyramid": square_pyramid,
    "g3": g3,
    "cube": cube,
    "pdw10": pdw10,
}


def base_graph(name: str) -> ColoredGraph:
    try:
        return BASE_GRAPHS[name]()
    except KeyError:
        raise ValueError(f"unknown base graph {name!r}; choose from {sorted(BASE_GRAPHS)}") from None


def k4_necklace(a: int) -> ColoredGraph:
    """a copies of K4 (A_i, B_i, C_i, D_i) joined by B_i B_{i+1} and C_i D_{i+1}.

    Copy i uses vertices 4i..4i+3 in the order A, B, C, D; red = all A_i.
    """
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    edges = []
    for i in range(a):
        edges += [(4 * i + x, 4 * i + y) for x, y in itertools.combinations(range(4), 2)]
    if a > 1:
        for i in range(a):
            j = (i + 1) % a
            edges.append((4 * i + 1, 4 * j + 1))
            edges.append((4 * i + 2, 4 * j + 3))
    g = Graph(4 * a, edges)
    return ColoredGraph(g, frozenset(4 * i for i in range(a)), 2, embed(g), (f"k4_necklace:{a}",))


# ------------------------------------------------------------- transformation P

@dataclass(frozen=True)
class PSite:
    """Two alternating quadrilateral faces sharing the edge b2-r2.

    ``face1`` is traced b1 -> r1 -> b2 -> r2 and ``face2`` is traced
    b2 -> r3 -> b3 -> r2.
    """

    b1: int
    r1: int
    b2: int
    r2: int
    r3: int
    b3: int

    @property
    def face1(self) -> tuple[int, int, int, int]:
        return (self.b1, self.r1, self.b2, self.r2)

    @property
    def face2(self) -> tuple[int, int, int, int]:
        return (self.b2, self.r3, self.b3, self.r2)

    @property
    def shared_edge(self) -> tuple[int, int]:
        return (self.b2, self.r2)

    def vertices(self) -> tuple[int, ...]:
        return (self.b1, self.r1, self.b2, self.r2, self.r3, self.b3)


def _rotate_to(walk, start: int):
    i = walk.index(start)
    return tuple(walk[i:] + walk[:i])


def _alternates(c: ColoredGraph, walk) -> bool:
    return all(c.is_red(walk[i]) != c.is_red(walk[(i + 1) % len(walk)]) for i in range(len(walk)))


def _site_from_edge(c: ColoredGraph, fs, df, b2: int, r2: int) -> PSite | None:
    f1, f2 = fs[df[(b2, r2)]], fs[df[(r2, b2)]]
    if len(f1) != 4 or len(f2) != 4 or len(set(f1)) != 4 or len(set(f2)) != 4:
        return None
    if not (_alternates(c, f1) and _alternates(c, f2)):
        return None
    b1, r1, _, _ = _rotate_to(list(f1), b2)[2:] + _rotate_to(list(f1), b2)[:2]
    _, r3, b3, _ = _rotate_to(list(f2), b2)
    site = PSite(b1, r1, b2, r2, r3, b3)
    if len(set(site.vertices())) != 6:
        return None
    return site


def find_p_site(c: ColoredGraph) -> PSite | None:
    """First P-site in edge order, or None when the graph has none."""
    if c.embedding is None:
        raise ConstructionError("find_p_site needs an embedded graph")
    fs = faces(c.embedding)
    df = dart_faces(c.embedding)
    for u, v in c.graph.edges:
        if c.is_red(u) == c.is_red(v):
            continue
        b2, r2 = (v, u) if c.is_red(u) else (u, v)
        site = _site_from_edge(c, fs, df, b2, r2)
        if site is not None:
            return site
    return None


def _check_site(c: ColoredGraph, site: PSite) -> None:
    fs = faces(c.embedding)
    cyc = {tuple(_rotate_to(list(f), min(f))) for f in fs}
    problems = []
    for name, f in (("face1", site.face1), ("face2", site.face2)):
        if _rotate_to(list(f), min(f)) not in cyc:
            problems.append(f"{name} {f} is not a face of the embedding")
        elif not _alternates(c, f):
            problems.append(f"{name} {f} does not alternate red/blue")
    if len(set(site.vertices())) != 6:
        problems.append("site vertices are not distinct")
    if c.is_red(site.b2) or not c.is_red(site.r2):
        problems.append("shared edge must run from blue b2 to red r2")
    if problems:
        raise ConstructionError("invalid P-site: " + "; ".join(problems))


def _insert_before(rot: list[list[int]], v: int, anchor: int, new: list[int]) -> None:
    r = rot[v]
    i = r.index(anchor)
    r[i:i] = new


def transform_p(c: ColoredGraph, site: PSite | None = None) -> ColoredGraph:
    """Replace two adjacent alternating quads by five: +2 red, +1 blue vertex.

    The shared edge b2-r2 is deleted; new reds ra (on b1, b2, bn), rb (on b2,
    b3, bn) and new blue bn (on ra, rb, r2) fill the hexagon.
    """
    if c.embedding is None:
        raise ConstructionError("transform_p needs an embedded graph")
    if site is None:
        site = find_p_site(c)
        if site is None:
            raise ConstructionError("no P-site: need two adjacent alternating quadrilateral faces")
    _check_site(c, site)
    b1, r1, b2, r2, r3, b3 = site.vertices()
    n = c.graph.n
    ra, rb, bn = n, n + 1, n + 2

    rot = [list(r) for r in c.embedding.rotation] + [[bn, b1, b2], [bn, b2, b3], [ra, rb, r2]]
    rot[b2].remove(r2)
    rot[r2].remove(b2)
    _insert_before(rot, b2, r1, [rb, ra])
    _insert_before(rot, b1, r2, [ra])
    _insert_before(rot, b3, r3, [rb])
    _insert_before(rot, r2, b3, [bn])

    g = c.graph.without_edges([(b2, r2)]).with_edges(
        [(ra, b1), (ra, b2), (ra, bn), (rb, b2), (rb, b3), (rb, bn), (bn, r2)], n=n + 3)
    step = f"P:b1={b1},r1={r1},b2={b2},r2={r2},r3={r3},b3={b3}"
    return ColoredGraph(g, c.red | {ra, rb}, c.k, Embedding(g, rot), c.provenance + (step,))


# ------------------------------------------------------------- transformation Q

def transform_q(c: ColoredGraph, v: int) -> ColoredGraph:
    """Push the degree-3 vertex v one step away from everything else.

    v's neighbours x, y, z (rotation order) are reattached to a new blue
    triangle a, b, c whose corners are v's only neighbours.
    """
    if c.embedding is None:
        raise ConstructionError("transform_q needs an embedded graph")
    if c.graph.degree(v) != 3:
        raise ConstructionError(f"transform_q needs a degree-3 vertex; vertex {v} has degree {c.graph.degree(v)}")
    x, y, z = c.embedding.rotation[v]
    n = c.graph.n
    a, b, t = n, n + 1, n + 2
    rot = [list(r) for r in c.embedding.rotation]
    for old, new in ((x, a), (y, b), (z, t)):
        rot[old][rot[old].index(v)] = new
    rot[v] = [a, b, t]
    rot += [[x, b, v, t], [y, t, v, a], [z, a, v, b]]
    g = c.graph.without_edges([(v, x), (v, y), (v, z)]).with_edges(
        [(v, a), (v, b), (v, t), (a, b), (b, t), (t, a), (a, x), (b, y), (t, z)], n=n + 3)
    return ColoredGraph(g, c.red, c.k, Embedding(g, rot), c.provenance + (f"Q:v={v}",))


# ------------------------------------------------------------------- builder

@dataclass(frozen=True)
class ExtremalInstance:
    k: int
    a: int
    all_red_deg3: bool
    result: ColoredGraph

    @property
    def order(self) -> int:
        return self.result.graph.n


def _with_k(c: ColoredGraph, k: int) -> ColoredGraph:
    return ColoredGraph(c.graph, c.red, k, c.embedding, c.provenance)


def _p_chain(c: ColoredGraph, times: int) -> ColoredGraph:
    for _ in range(times):
        c = transform_p(c)
    return c


def _independent_extremal(a: int, all_red_deg3: bool) -> ColoredGraph:
    if a == 1:
        return tetrahedron()
    if a == 2:
        return square_pyramid()
    if a == 3:
        return g3()
    if a % 2 == 0:
        return _p_chain(cube(), (a - 4) // 2)
    if all_red_deg3:
        return _p_chain(g3(), (a - 3) // 2)
    return _p_chain(pdw10(), (a - 5) // 2)


def _q_rounds(c: ColoredGraph, rounds: int) -> ColoredGraph:
    for _ in range(rounds):
        for v in sorted(c.red):
            c = transform_q(c, v)
    return c


def build_extremal(k: int, a: int, all_red_deg3: bool = False) -> ExtremalInstance:
    """Polyhedron of order p_formula(k, a) with a k-independent red set of size a."""
    if k < 1 or a < 1:
        raise ValueError(f"k and a must be positive, got k={k}, a={a}")
    if a == 1:
        c = tetrahedron()
    elif k == 1:
        c = _independent_extremal(a, all_red_deg3)
    elif k % 2 == 0:
        c = _q_rounds(k4_necklace(a), k // 2 - 1)
    else:
        c = _q_rounds(_independent_extremal(a, True), (k - 1) // 2)
    return ExtremalInstance(k, a, all_red_deg3, _with_k(c, k))


# -------------------------------------------------------------- radial graph

def radial_graph(e: Embedding) -> ColoredGraph:
    """Vertex-face incidence graph; face vertices come after the originals and are red."""
    rep = is_polyhedral(e.graph)
    if not rep.polyhedral:
        raise ConstructionError("radial_graph needs a polyhedral embedding: " + "; ".join(rep.notes or ["not 3-connected"]))
    fs = faces(e)
    df = dart_faces(e)
    n = e.graph.n
    rot = [[n + df[(v, w)] for w in e.rotation[v]] for v in range(n)]
    rot += [list(f) for f in fs]
    edges = [(v, n + i) for i, f in enumerate(fs) for v in f]
    g = Graph(n + len(fs), edges)
    return ColoredGraph(g, frozenset(range(n, n + len(fs))), 1, Embedding(g, rot), ("radial",))


# ------------------------------------------------------------ odd corollary

@dataclass
class CorollaryReport:
    passed: bool
    branch: str  # "H" or "H'"
    removed_blue_edges: list[tuple[int, int]] = field(default_factory=list)
    chord: tuple[int, int] | None = None
    face_lengths: list[int] = field(default_factory=list)
    two_connected: bool = False
    offending_faces: list[tuple[int, ...]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def check_odd_corollary(c: ColoredGraph) -> CorollaryReport:
    """Drop blue-blue edges, close at most one alternating hexagon, expect a 2-connected quadrangulation."""
    if c.embedding is None:
        raise ConstructionError("check_odd_corollary needs an embedded graph")
    g = c.graph
    bb = [(u, v) for u, v in g.edges if not c.is_red(u) and not c.is_red(v)]
    rot = [list(r) for r in c.embedding.rotation]
    for u, v in bb:
        rot[u].remove(v)
        rot[v].remove(u)
    h = g.without_edges(bb)
    rep = CorollaryReport(False, "H", removed_blue_edges=bb)
    if not h.is_connected():
        rep.notes.append(f"removing blue-blue edges disconnects the graph: {h.components()}")
        return rep
    emb = Embedding(h, rot)
    fs = faces(emb)
    hexagons = [f for f in fs if len(f) == 6 and len(set(f)) == 6 and _alternates(c, f)]
    if len(hexagons) == 1 and all(len(f) == 4 for f in fs if f is not hexagons[0]):
        hx = hexagons[0]
        for i in range(6):
            r, b = hx[i], hx[(i + 3) % 6]
            if c.is_red(r) and not h.has_edge(r, b):
                _insert_before(rot, r, hx[i - 1], [b])
                _insert_before(rot, b, hx[(i + 2) % 6], [r])
                h = h.with_edges([(r, b)])
                emb = Embedding(h, rot)
                fs = faces(emb)
                rep.branch = "H'"
                rep.chord = (r, b)
                break
        else:
            rep.notes.append(f"hexagon {hx} admits no new red-blue chord")
    rep.face_lengths = sorted(len(f) for f in fs)
    rep.offending_faces = [f for f in fs if len(f) != 4]
    if h.n > 2:
        rep.two_connected = is_k_connected(h, 2)[0]
    rep.passed = not rep.offending_faces and rep.two_connected and h.q == 2 * h.n - 4
    return rep
