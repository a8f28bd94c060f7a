"""Graphs, rotation-system embeddings, colourings and canonical forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import accel


class GraphError(ValueError):
    """Raised for malformed graphs or embeddings."""


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``.  Instances are
    immutable; every editing helper returns a new graph.
    """

    __slots__ = ("n", "edges", "adjacency", "_masks", "_csr")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        pairs = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a loop")
            pairs.add((u, v) if u < v else (v, u))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(pairs)))
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "_masks", None)
        object.__setattr__(self, "_csr", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.edges))

    @property
    def p(self) -> int:
        return self.n

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        if self._masks is None:
            ms = tuple(sum(1 << u for u in nb) for nb in self.adjacency)
            object.__setattr__(self, "_masks", ms)
        return self._masks

    @property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        if self._csr is None:
            object.__setattr__(self, "_csr", accel.csr(self.adjacency))
        return self._csr

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def without_edges(self, drop: Iterable[Sequence[int]]) -> "Graph":
        gone = {(min(u, v), max(u, v)) for u, v in drop}
        return Graph(self.n, (e for e in self.edges if e not in gone))

    def with_edges(self, extra: Iterable[Sequence[int]], n: int | None = None) -> "Graph":
        return Graph(self.n if n is None else n, itertools.chain(self.edges, extra))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        k = accel.kernels()
        indptr, indices = self.csr
        return bool(k.connected_without(indptr, indices, self.n, np.zeros(self.n, dtype=np.bool_)))

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.adjacency[v]:
                    if u not in seen:
                        seen.add(u)
                        comp.append(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q})"


def graph_new(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, edges)


class Embedding:
    """A graph together with a rotation system.

    ``rotation[v]`` lists the neighbours of ``v`` in cyclic order.  Faces are
    traced with the rule: after the dart ``u -> v`` comes ``v -> w`` where
    ``w`` precedes ``u`` in ``rotation[v]``.  Faces are not cached.
    """

    __slots__ = ("graph", "rotation")

    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]]):
        if len(rotation) != graph.n:
            raise GraphError(f"rotation has {len(rotation)} entries for {graph.n} vertices")
        rot = tuple(tuple(int(x) for x in r) for r in rotation)
        for v, r in enumerate(rot):
            if len(r) != len(set(r)) or set(r) != graph.adjacency[v]:
                raise GraphError(f"rotation at vertex {v} is not a permutation of its neighbours")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "rotation", rot)

    def __setattr__(self, name, value):
        raise AttributeError("Embedding is immutable")

    def pred(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[r.index(u) - 1]

    def faces(self) -> list[tuple[int, ...]]:
        return faces(self)

    def euler_characteristic(self) -> int:
        g = self.graph
        return g.p - g.q + len(self.faces())

    def __eq__(self, other) -> bool:
        return isinstance(other, Embedding) and self.graph == other.graph and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash((self.graph, self.rotation))

    def __repr__(self) -> str:
        return f"Embedding(p={self.graph.p}, q={self.graph.q})"


def faces(e: Embedding) -> list[tuple[int, ...]]:
    """Trace every facial walk; each dart lies on exactly one walk."""
    g = e.graph
    if not g.is_connected():
        raise GraphError("face tracing needs a connected graph; components: "
                         f"{g.components()}")
    pos = [{u: i for i, u in enumerate(r)} for r in e.rotation]
    rot = e.rotation
    used: set[tuple[int, int]] = set()
    walks = []
    for u, v in itertools.chain(g.edges, ((v, u) for u, v in g.edges)):
        if (u, v) in used:
            continue
        walk = []
        a, b = u, v
        while (a, b) not in used:
            used.add((a, b))
            walk.append(a)
            r = rot[b]
            a, b = b, r[pos[b][a] - 1]
        walks.append(tuple(walk))
    return walks


def dart_faces(e: Embedding) -> dict[tuple[int, int], int]:
    """Map each dart ``(u, v)`` to the index of its face in ``faces(e)``."""
    out = {}
    for i, walk in enumerate(faces(e)):
        for j, u in enumerate(walk):
            out[(u, walk[(j + 1) % len(walk)])] = i
    return out


@dataclass(frozen=True)
class ColoredGraph:
    """Graph with a designated red vertex set claimed to be k-independent."""

    graph: Graph
    red: frozenset[int]
    k: int = 1
    embedding: Embedding | None = None
    provenance: tuple[str, ...] = ()
    _certified: bool = field(default=False, init=False, repr=False, compare=False)

    def __post_init__(self):
        red = frozenset(int(v) for v in self.red)
        object.__setattr__(self, "red", red)
        bad = [v for v in red if not 0 <= v < self.graph.n]
        if bad:
            raise GraphError(f"red vertices {sorted(bad)} are not in the graph")
        if self.k < 1:
            raise GraphError(f"k must be positive, got {self.k}")
        if self.embedding is not None and self.embedding.graph != self.graph:
            raise GraphError("embedding does not match graph")

    @property
    def blue(self) -> frozenset[int]:
        return frozenset(range(self.graph.n)) - self.red

    @property
    def certified(self) -> bool:
        return self._certified

    def is_red(self, v: int) -> bool:
        return v in self.red


@dataclass(frozen=True, order=True)
class CanonCode:
    n: int
    code: bytes

    def hex(self) -> str:
        return self.code.hex()

    def __str__(self) -> str:
        return self.hex()


def _leaf_code(masks: Sequence[int], n: int, order: Sequence[int]) -> bytes:
    # order[i] = original vertex placed at position i; upper triangle row-major
    bits = 0
    for i in range(n):
        row = masks[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | ((row >> order[j]) & 1)
    nbits = n * (n - 1) // 2
    return bits.to_bytes((nbits + 7) // 8, "big")


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order realising the canonical form.

    Individualisation-refinement: refine to an equitable colouring,
    individualise each vertex of the first smallest non-trivial cell, recurse.
    Children whose refinement trace is not maximal are discarded; among the
    surviving leaves the one with the largest (trace path, adjacency code)
    wins.
    """
    n = g.n
    if n <= 1:
        return list(range(n))
    k = accel.kernels()
    indptr, indices = g.csr
    masks = g.masks

    def refine(col):
        new, tr = k.refine_colors(indptr, indices, n, col)
        return new, int(tr)

    best_key = None
    best_order: list[int] = []

    def search(col, path):
        nonlocal best_key, best_order
        ncell = int(col.max()) + 1
        if ncell == n:
            order = [0] * n
            for v in range(n):
                order[int(col[v])] = v
            key = (path, _leaf_code(masks, n, order))
            if best_key is None or key > best_key:
                best_key, best_order = key, order
            return
        sizes = np.bincount(col, minlength=ncell)
        target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
        children = []
        for v in np.flatnonzero(col == target):
            c = np.where(col > target, col + 1, col)
            c = np.where(col == target, target + 1, c)
            c[v] = target
            children.append(refine(c))
        top = max(tr for _, tr in children)
        for c, tr in children:
            if tr == top:
                search(c, path + (tr,))

    col0, tr0 = refine(np.zeros(n, dtype=np.int64))
    search(col0, (tr0,))
    return best_order


def canonical_form(g: Graph) -> CanonCode:
    order = canonical_labeling(g)
    return CanonCode(g.n, g.n.to_bytes(2, "big") + _leaf_code(g.masks, g.n, order))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.q != g2.q or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """A vertex map ``g1 -> g2`` preserving edges, or None."""
    if not are_isomorphic(g1, g2):
        return None
    o1, o2 = canonical_labeling(g1), canonical_labeling(g2)
    perm = [0] * g1.n
    for a, b in zip(o1, o2):
        perm[a] = b
    return perm
