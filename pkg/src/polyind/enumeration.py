"""Isomorph-free generation of triangulations and polyhedra on few vertices.

Triangulations come from a breadth-first search of the diagonal-flip graph
starting at a stacked triangulation; the flip graph on a fixed vertex count
is connected, so every isomorphism class is reached.

Polyhedra come from triangulations by deleting edges one at a time.  A
3-connected planar graph that is not a triangulation has a face of length at
least 4, and one of that face's diagonals can be added while staying planar
(and, trivially, 3-connected).  So every polyhedron with q edges is a
polyhedron with q + 1 edges minus one edge, and sweeping edge counts
downward from 3n - 6 reaches every class.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .analysis import (
    all_pairs_distances,
    embed,
    is_k_connected,
    k_independence_number,
    max_independent_set,
    has_separating_quadrilateral,
    is_polyhedral,
    is_quadrangulation,
)
from .constructions import p_formula, radial_graph
from .core import CanonCode, Embedding, Graph, canonical_form, canonical_labeling

TRIANGULATION_RANGE = (4, 10)
POLYHEDRA_RANGE = (4, 9)


class EnvelopeError(ValueError):
    """Requested size lies outside the desk-scale envelope."""


def _check_range(n: int, bounds: tuple[int, int], what: str) -> None:
    lo, hi = bounds
    if not lo <= n <= hi:
        raise EnvelopeError(f"out of desk-scale envelope: {what} supported for {lo} <= n <= {hi}, got {n}")


def workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("POLYIND_WORKERS", "1")))
    except ValueError:
        return 1


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


# ------------------------------------------------------------------ flips

def flip(e: Embedding, edge: tuple[int, int]) -> Embedding | None:
    """Diagonal flip of ``edge``; None when the flip is not allowed."""
    u, v = edge
    g = e.graph
    if not g.has_edge(u, v):
        return None
    w = e.pred(v, u)   # face u -> v -> w
    t = e.pred(u, v)   # face v -> u -> t
    if e.pred(w, v) != u or e.pred(t, u) != v:
        return None  # not two triangles
    if w == t or g.has_edge(w, t):
        return None
    rot = [list(r) for r in e.rotation]
    rot[u].remove(v)
    rot[v].remove(u)
    rot[w].insert(rot[w].index(v), t)
    rot[t].insert(rot[t].index(u), w)
    h = g.without_edges([(u, v)]).with_edges([(w, t)])
    return Embedding(h, rot)


def stacked_triangulation(n: int) -> Embedding:
    """K4 with degree-3 vertices inserted one by one into the first traced face."""
    if n < 4:
        raise ValueError(f"triangulations need n >= 4, got {n}")
    e = embed(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
    for s in range(4, n):
        x, y, z = e.faces()[0]
        rot = [list(r) for r in e.rotation] + [[x, y, z]]
        rot[x].insert(rot[x].index(z), s)
        rot[y].insert(rot[y].index(x), s)
        rot[z].insert(rot[z].index(y), s)
        g = e.graph.with_edges([(s, x), (s, y), (s, z)], n=s + 1)
        e = Embedding(g, rot)
    return e


def enumerate_triangulations(n: int) -> Iterator[Embedding]:
    """One embedded representative per maximal planar graph on n vertices.

    Output is sorted by canonical code; each representative is the canonical
    relabelling of its class.
    """
    _check_range(n, TRIANGULATION_RANGE, "triangulations")
    start = stacked_triangulation(n)
    seen: dict[CanonCode, Embedding] = {canonical_form(start.graph): start}
    queue = [start]
    while queue:
        e = queue.pop()
        for edge in e.graph.edges:
            f = flip(e, edge)
            if f is None:
                continue
            code = canonical_form(f.graph)
            if code not in seen:
                seen[code] = f
                queue.append(f)
    for code in sorted(seen):
        yield embed(canonical_graph(seen[code].graph))


# --------------------------------------------------------------- polyhedra

def _children(parents: list[Graph]) -> dict[CanonCode, Graph]:
    out: dict[CanonCode, Graph] = {}
    for g in parents:
        deg = g.degrees()
        for u, v in g.edges:
            if deg[u] <= 3 or deg[v] <= 3:
                continue
            h = g.without_edges([(u, v)])
            if not is_k_connected(h, 3)[0]:
                continue
            code = canonical_form(h)
            if code not in out:
                out[code] = h
    return out


def _chunks(items: list, parts: int) -> list[list]:
    return [items[i::parts] for i in range(parts) if items[i::parts]]


def enumerate_polyhedra(n: int, workers: int | None = None) -> Iterator[Graph]:
    """One representative per 3-connected planar graph on n vertices.

    Representatives are canonically relabelled and yielded in code order.
    ``workers`` (default: ``POLYIND_WORKERS``) splits each edge-count level
    across processes; the merged result does not depend on it.
    """
    _check_range(n, POLYHEDRA_RANGE, "polyhedra")
    workers = workers_from_env() if workers is None else max(1, workers)
    level = {canonical_form(e.graph): e.graph for e in enumerate_triangulations(n)}
    found: dict[CanonCode, Graph] = dict(level)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while level:
            parents = list(level.values())
            if pool is None:
                level = _children(parents)
            else:
                level = {}
                for part in pool.map(_children, _chunks(parents, workers)):
                    for code, g in part.items():
                        level.setdefault(code, g)
            for code, g in level.items():
                found.setdefault(code, g)
    finally:
        if pool is not None:
            pool.shutdown()
    for code in sorted(found):
        yield canonical_graph(found[code])


@dataclass
class GenerationRun:
    n: int
    kind: str
    codes: list[CanonCode] = field(default_factory=list)
    count: int = 0
    seconds: float = 0.0
    results: list = field(default_factory=list)

    def summary(self) -> dict:
        return {"n": self.n, "kind": self.kind, "count": self.count, "seconds": round(self.seconds, 3)}


def run_generation(n: int, kind: str, callback: Callable[[Graph], object] | None = None,
                   workers: int | None = None) -> GenerationRun:
    t0 = time.perf_counter()
    if kind == "triangulations":
        graphs = (e.graph for e in enumerate_triangulations(n))
    elif kind == "polyhedra":
        graphs = enumerate_polyhedra(n, workers)
    else:
        raise ValueError(f"unknown kind {kind!r}; use 'triangulations' or 'polyhedra'")
    run = GenerationRun(n, kind)
    for g in graphs:
        run.codes.append(canonical_form(g))
        if callback is not None:
            run.results.append(callback(g))
    run.count = len(run.codes)
    run.seconds = time.perf_counter() - t0
    return run


# ------------------------------------------------------------ lower bounds

@dataclass
class MinimalityReport:
    k: int
    a: int
    order: int
    holds: bool
    scanned: dict[int, int] = field(default_factory=dict)
    max_value: dict[int, int] = field(default_factory=dict)
    max_diameter: dict[int, int] = field(default_factory=dict)
    counterexample: list[list[int]] | None = None

    @property
    def top_order(self) -> int:
        return self.order - 1

    def to_dict(self) -> dict:
        return {
            "k": self.k, "a": self.a, "p_formula": self.order, "holds": self.holds,
            "scanned": self.scanned, "max_k_independence": self.max_value,
            "max_diameter": self.max_diameter, "counterexample": self.counterexample,
        }


def minimality_oracle(k: int, a: int, workers: int | None = None) -> MinimalityReport:
    """Scan every polyhedron of order below p_formula(k, a) for a k-independent a-set.

    All orders from 4 to p_formula(k, a) - 1 are scanned, so the report pins
    the formula as a true minimum rather than only at one order.
    """
    order = p_formula(k, a)
    if order - 1 > POLYHEDRA_RANGE[1]:
        raise EnvelopeError(f"out of desk-scale envelope: p({k},{a}) - 1 = {order - 1} > {POLYHEDRA_RANGE[1]}")
    rep = MinimalityReport(k, a, order, True)
    for n in range(POLYHEDRA_RANGE[0], order):
        best = 0
        diam = 0
        count = 0
        for g in enumerate_polyhedra(n, workers):
            count += 1
            val = k_independence_number(g, k)
            best = max(best, val)
            diam = max(diam, int(all_pairs_distances(g).max()))
            if val >= a and rep.holds:
                rep.holds = False
                rep.counterexample = [list(e) for e in g.edges]
        rep.scanned[n] = count
        rep.max_value[n] = best
        rep.max_diameter[n] = diam
    return rep


# ---------------------------------------------------------- classification

@dataclass
class ClassificationReport:
    a: int
    forward_checked: int = 0
    forward_ok: bool = True
    forward_details: list[dict] = field(default_factory=list)
    reverse_checked: bool = False
    reverse_ok: bool | None = None
    reverse_min_edges: int | None = None
    reverse_minimizers: int | None = None
    reverse_scanned: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.forward_ok and (self.reverse_ok is not False)

    def to_dict(self) -> dict:
        return {
            "a": self.a, "passed": self.passed, "forward_checked": self.forward_checked,
            "forward_ok": self.forward_ok, "forward": self.forward_details,
            "reverse_checked": self.reverse_checked, "reverse_ok": self.reverse_ok,
            "reverse_min_edges": self.reverse_min_edges,
            "reverse_minimizers": self.reverse_minimizers,
            "reverse_scanned": self.reverse_scanned, "notes": self.notes,
        }


def classify_extremal(a: int, forward_only: bool = False, workers: int | None = None) -> ClassificationReport:
    """Check that extremal graphs for even a are the radial graphs of triangulations with a faces."""
    if a < 4 or a % 2:
        raise ValueError(f"classification needs an even a >= 4, got {a}")
    p = p_formula(1, a)
    tn = a // 2 + 2
    _check_range(tn, TRIANGULATION_RANGE, "triangulations")
    rep = ClassificationReport(a)
    radials = []
    for tri in enumerate_triangulations(tn):
        rg = radial_graph(tri)
        g = rg.graph
        sep, witness = has_separating_quadrilateral(rg.embedding)
        alpha = len(max_independent_set(g))
        d = {
            "triangulation_edges": [list(e) for e in tri.graph.edges],
            "order": g.p, "edges": g.q, "alpha": alpha,
            "quadrangulation": is_quadrangulation(rg.embedding),
            "polyhedral": is_polyhedral(g).polyhedral,
            "separating_4cycle": witness,
        }
        ok = (g.p == p and g.q == 2 * g.p - 4 and alpha >= a and not sep
              and d["quadrangulation"] and d["polyhedral"])
        d["ok"] = ok
        rep.forward_details.append(d)
        rep.forward_ok &= ok
        rep.forward_checked += 1
        radials.append(g)

    if forward_only:
        return rep
    if p > POLYHEDRA_RANGE[1]:
        rep.notes.append(f"reverse direction skipped: p = {p} exceeds the polyhedra envelope")
        return rep
    rep.reverse_checked = True
    holders = []
    scanned = 0
    for g in enumerate_polyhedra(p, workers):
        scanned += 1
        if len(max_independent_set(g)) >= a:
            holders.append(g)
    rep.reverse_scanned = scanned
    if not holders:
        rep.reverse_ok = False
        rep.notes.append(f"no polyhedron on {p} vertices has alpha >= {a}")
        return rep
    qmin = min(g.q for g in holders)
    minimizers = {canonical_form(g) for g in holders if g.q == qmin}
    expected = {canonical_form(g) for g in radials}
    rep.reverse_min_edges = qmin
    rep.reverse_minimizers = len(minimizers)
    rep.reverse_ok = minimizers == expected
    if not rep.reverse_ok:
        rep.notes.append("minimum-edge extremal graphs differ from the radial graphs")
    return rep
