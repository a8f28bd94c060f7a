"""JSON, graph6 and DOT serialisation.

JSON is the lossless interchange format.  graph6 keeps only the labelled
graph (no colouring, no rotation).  DOT is for viewing.
"""

from __future__ import annotations

import json
from pathlib import Path

import networkx as nx

from .core import ColoredGraph, Embedding, Graph, GraphError


def to_dict(obj: Graph | Embedding | ColoredGraph) -> dict:
    if isinstance(obj, ColoredGraph):
        d = to_dict(obj.embedding if obj.embedding is not None else obj.graph)
        d["red"] = sorted(obj.red)
        d["k"] = obj.k
        if obj.provenance:
            d["provenance"] = list(obj.provenance)
        return d
    if isinstance(obj, Embedding):
        d = to_dict(obj.graph)
        d["rotation"] = [list(r) for r in obj.rotation]
        return d
    return {"n": obj.n, "edges": [list(e) for e in obj.edges]}


def from_dict(d: dict) -> ColoredGraph:
    """Parse the Graph JSON object; missing ``red`` means no red vertices."""
    try:
        g = Graph(int(d["n"]), d["edges"])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"graph JSON needs 'n' and 'edges': {exc}") from None
    emb = Embedding(g, d["rotation"]) if d.get("rotation") is not None else None
    return ColoredGraph(g, frozenset(d.get("red", ())), int(d.get("k", 1)), emb,
                        tuple(d.get("provenance", ())))


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), indent=None, separators=(",", ":")) + "\n"


def to_graph6(g: Graph) -> str:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        nxg = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise GraphError(f"not a graph6 line: {s[:20]!r} ({exc})") from None
    return Graph(nxg.number_of_nodes(), nxg.edges())


def to_dot(obj: Graph | ColoredGraph) -> str:
    c = obj if isinstance(obj, ColoredGraph) else ColoredGraph(obj, frozenset())
    lines = ["graph G {", "  node [style=filled, fontcolor=white];"]
    for v in range(c.graph.n):
        color = "red" if c.is_red(v) else "blue"
        lines.append(f"  {v} [fillcolor={color}];")
    for u, v in c.graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> ColoredGraph:
    """Read a JSON graph file, or the first graph of a graph6 file."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_dict(json.loads(text))
    if not stripped:
        raise GraphError(f"{path}: empty graph file")
    first = stripped.splitlines()[0]
    return ColoredGraph(from_graph6(first), frozenset())


def render(obj, fmt: str) -> str:
    if fmt == "json":
        return dumps(obj)
    g = obj.graph if isinstance(obj, (ColoredGraph, Embedding)) else obj
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(obj if isinstance(obj, ColoredGraph) else g)
    raise ValueError(f"unknown format {fmt!r}")
