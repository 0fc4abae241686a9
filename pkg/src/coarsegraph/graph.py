"""Finite undirected simple graphs and the metric primitives everything else builds on.

Vertices are opaque hashable identifiers: ints, strings, or (nested) tuples of
those.  Graphs are immutable values; every transformation returns a new Graph.
Distances are shortest-path lengths in the graph itself, with ``math.inf``
standing in for "no path".
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import GraphToolError, ParseError, UnknownVertexError

Vertex = int | str | tuple


def vertex_key(v: Vertex):
    """Total order key for mixed int/str/tuple vertex identifiers.

    Sorts all ints before all strings before all tuples; tuples compare
    recursively.  Used everywhere a deterministic iteration order is needed.
    """
    if isinstance(v, bool):
        raise GraphToolError(f"booleans are not valid vertex identifiers: {v!r}")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(x) for x in v))
    raise GraphToolError(f"unsupported vertex identifier type: {v!r}")


def sort_vertices(vs: Iterable[Vertex]) -> list[Vertex]:
    return sorted(vs, key=vertex_key)


def canonical_edge(u: Vertex, v: Vertex) -> tuple[Vertex, Vertex]:
    """The pair (u, v) with endpoints in canonical order."""
    if vertex_key(u) <= vertex_key(v):
        return (u, v)
    return (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable finite simple graph.

    ``edges`` holds canonical-order pairs; use :meth:`build` rather than the
    raw constructor so endpoints are registered and loops rejected.
    """

    vertices: frozenset
    edges: frozenset
    _adj: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        adj: dict = {v: set() for v in self.vertices}
        for (u, v) in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(ns) for v, ns in adj.items()})

    @classmethod
    def build(cls, edges: Iterable[tuple[Vertex, Vertex]] = (), vertices: Iterable[Vertex] = ()) -> "Graph":
        vs = set(vertices)
        es = set()
        for (u, v) in edges:
            if u == v:
                raise GraphToolError(f"loops are not allowed: ({u!r}, {v!r})")
            vs.add(u)
            vs.add(v)
            es.add(canonical_edge(u, v))
        return cls(frozenset(vs), frozenset(es))

    # -- basic queries -------------------------------------------------

    def __contains__(self, v: Vertex) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: Vertex) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(repr(v)) from None

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return v in self.neighbors(u)

    def sorted_vertices(self) -> list[Vertex]:
        return sort_vertices(self.vertices)

    def sorted_edges(self) -> list[tuple[Vertex, Vertex]]:
        return sorted(self.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))

    def require_vertex(self, v: Vertex) -> None:
        if v not in self.vertices:
            raise UnknownVertexError(repr(v))


# ---------------------------------------------------------------------------
# metric / connectivity primitives
# ---------------------------------------------------------------------------


def distances_from(g: Graph, sources: Iterable[Vertex]) -> dict:
    """BFS distances from a set of sources (unreached vertices absent)."""
    dist: dict = {}
    queue: deque = deque()
    for s in sources:
        g.require_vertex(s)
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: Vertex, v: Vertex) -> int | float:
    """d_G(u, v); ``math.inf`` when u and v lie in different components."""
    g.require_vertex(u)
    g.require_vertex(v)
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.neighbors(x):
            if w == v:
                return seen[x] + 1
            if w not in seen:
                seen[w] = seen[x] + 1
                queue.append(w)
    return math.inf


def set_distance(g: Graph, xs: Iterable[Vertex], ys: Iterable[Vertex]) -> int | float:
    """min over x in xs, y in ys of d_G(x, y); ``math.inf`` if either side is empty
    or no pair is connected."""
    xset = set(xs)
    yset = set(ys)
    if not xset or not yset:
        return math.inf
    if xset & yset:
        return 0
    dist = distances_from(g, xset)
    hits = [dist[y] for y in yset if y in dist]
    return min(hits) if hits else math.inf


def eccentricity_table(g: Graph) -> dict:
    """All-pairs distances: vertex -> {vertex -> distance}, reachable pairs only."""
    return {v: distances_from(g, [v]) for v in g.sorted_vertices()}


def components(g: Graph) -> list[frozenset]:
    """Connected components, sorted by canonical key of their smallest vertex."""
    seen: set = set()
    comps: list[frozenset] = []
    for v in g.sorted_vertices():
        if v in seen:
            continue
        comp = frozenset(distances_from(g, [v]))
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def neighborhood(g: Graph, xs: Iterable[Vertex]) -> frozenset:
    """N(X): vertices outside X with a neighbour in X."""
    xset = set(xs)
    out: set = set()
    for x in xset:
        out |= g.neighbors(x)
    return frozenset(out - xset)


def induced_subgraph(g: Graph, keep: Iterable[Vertex]) -> Graph:
    kset = set(keep)
    for v in kset:
        g.require_vertex(v)
    edges = [(u, v) for (u, v) in g.edges if u in kset and v in kset]
    return Graph.build(edges, vertices=kset)


def remove_vertices(g: Graph, drop: Iterable[Vertex]) -> Graph:
    return induced_subgraph(g, g.vertices - set(drop))


def union(a: Graph, b: Graph) -> Graph:
    return Graph.build(list(a.edges) + list(b.edges), vertices=a.vertices | b.vertices)


def add_edges(g: Graph, edges: Iterable[tuple[Vertex, Vertex]]) -> Graph:
    return Graph.build(list(g.edges) + list(edges), vertices=g.vertices)


def relabel(g: Graph, mapping: Mapping) -> Graph:
    """Apply an injective vertex renaming; raises if the map merges vertices."""
    img = {v: mapping.get(v, v) for v in g.vertices}
    if len(set(img.values())) != len(img):
        raise GraphToolError("relabelling is not injective on the vertex set")
    return Graph.build(
        [(img[u], img[v]) for (u, v) in g.edges],
        vertices=[img[v] for v in g.vertices],
    )


# ---------------------------------------------------------------------------
# walks and paths
# ---------------------------------------------------------------------------


def is_path(g: Graph, seq: Iterable[Vertex]) -> bool:
    """True iff seq is a sequence of distinct vertices with consecutive ones adjacent.

    A single vertex counts as a (trivial) path; an empty sequence does not.
    """
    vs = list(seq)
    if not vs:
        return False
    if len(set(vs)) != len(vs):
        return False
    for v in vs:
        if v not in g.vertices:
            return False
    return all(g.adjacent(a, b) for a, b in zip(vs, vs[1:]))


def shortest_path(g: Graph, u: Vertex, v: Vertex) -> list[Vertex] | None:
    """One shortest u-v path (deterministic: BFS expands neighbours in key order)."""
    g.require_vertex(u)
    g.require_vertex(v)
    if u == v:
        return [u]
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in sort_vertices(g.neighbors(x)):
            if w not in prev:
                prev[w] = x
                if w == v:
                    path = [v]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                queue.append(w)
    return None


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------
# One edge per line ("u v"), a bare token for an isolated vertex, '#' starts a
# comment.  Tokens parse back to ints when they round-trip as ints, else stay
# strings.


def parse_vertex_token(tok: str) -> Vertex:
    """Inverse of vertex_token on its image: ints and tuple tokens are
    recognised when re-rendering them reproduces the input exactly; anything
    else stays a plain string."""
    if tok.startswith("(") and tok.endswith(")"):
        parts: list[str] = []
        depth = 0
        current: list[str] = []
        for ch in tok[1:-1]:
            if ch == "|" and depth == 0:
                parts.append("".join(current))
                current = []
                continue
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            current.append(ch)
        parts.append("".join(current))
        if depth == 0:
            candidate = tuple(parse_vertex_token(p) for p in parts)
            if vertex_token(candidate) == tok:
                return candidate
        return tok
    try:
        n = int(tok)
    except ValueError:
        return tok
    return n if str(n) == tok else tok


def vertex_token(v: Vertex) -> str:
    """Serialised form of a vertex for the edge-list format and DOT output."""
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return v
    if isinstance(v, tuple):
        return "(" + "|".join(vertex_token(x) for x in v) + ")"
    raise GraphToolError(f"unsupported vertex identifier type: {v!r}")


def parse_edge_list(text: str) -> Graph:
    vertices: list[Vertex] = []
    edges: list[tuple[Vertex, Vertex]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) == 1:
            vertices.append(parse_vertex_token(toks[0]))
        elif len(toks) == 2:
            u, v = (parse_vertex_token(t) for t in toks)
            if u == v:
                raise ParseError(f"loop edge {toks[0]!r}", line=lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"expected 1 or 2 tokens, got {len(toks)}", line=lineno)
    return Graph.build(edges, vertices=vertices)


def format_edge_list(g: Graph) -> str:
    lines = []
    covered: set = set()
    for (u, v) in g.sorted_edges():
        tu, tv = vertex_token(u), vertex_token(v)
        for t in (tu, tv):
            if any(ch.isspace() for ch in t) or "#" in t or not t:
                raise GraphToolError(f"vertex {t!r} cannot be serialised to the edge-list format")
        lines.append(f"{tu} {tv}")
        covered.add(u)
        covered.add(v)
    for v in sort_vertices(g.vertices - covered):
        lines.append(vertex_token(v))
    return "\n".join(lines) + ("\n" if lines else "")


def _dot_quote(token: str) -> str:
    return '"' + token.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    covered: set = set()
    for (u, v) in g.sorted_edges():
        lines.append(f"  {_dot_quote(vertex_token(u))} -- {_dot_quote(vertex_token(v))};")
        covered.add(u)
        covered.add(v)
    for v in sort_vertices(g.vertices - covered):
        lines.append(f"  {_dot_quote(vertex_token(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
