"""Tree-decompositions: validation, torsos, widths, contraction, tree centers.

A tree-decomposition of G is a tree T plus a family of parts (V_t) with
(T1) the parts cover V(G),
(T2) every edge of G lies inside some part,
(T3) for each vertex v, the set {t : v ∈ V_t} induces a connected subtree.

Adhesion sets are the intersections V_t ∩ V_t' over tree edges; the torso of a
part is its induced subgraph plus clique edges on each incident adhesion set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .errors import CapacityError, EmptySetError, StructuralError
from .graph import (
    Graph,
    Vertex,
    add_edges,
    canonical_edge,
    components,
    distances_from,
    induced_subgraph,
    parse_vertex_token,
    sort_vertices,
    vertex_key,
    vertex_token,
)
from .separations import Separation

DEFAULT_TREEWIDTH_CAP = 14


def _check_is_tree(tree: Graph) -> None:
    if not tree.vertices:
        raise StructuralError("decomposition tree must have at least one node")
    if len(tree.edges) != len(tree.vertices) - 1 or len(components(tree)) != 1:
        raise StructuralError("decomposition tree is not a tree")


@dataclass(frozen=True)
class TreeDecomposition:
    tree: Graph
    parts: dict  # tree node -> frozenset of graph vertices

    def __post_init__(self):
        _check_is_tree(self.tree)
        if set(self.parts) != set(self.tree.vertices):
            raise StructuralError("parts must be keyed exactly by the tree nodes")
        object.__setattr__(self, "parts", {t: frozenset(p) for t, p in self.parts.items()})

    def part(self, t) -> frozenset:
        try:
            return self.parts[t]
        except KeyError:
            raise StructuralError(f"no such tree node: {t!r}") from None

    def nodes_containing(self, v: Vertex) -> frozenset:
        return frozenset(t for t, p in self.parts.items() if v in p)


@dataclass(frozen=True)
class TDReport:
    ok: bool
    axiom: str | None = None
    witness: object = None
    message: str = ""


def validate(host: Graph, td: TreeDecomposition) -> TDReport:
    """Report the first violated axiom (T1, T2, T3) with a witness."""
    covered = frozenset().union(*td.parts.values()) if td.parts else frozenset()
    for v in sort_vertices(covered - host.vertices):
        return TDReport(False, "T1", v, f"part vertex {vertex_token(v)} is not a graph vertex")
    for v in sort_vertices(host.vertices - covered):
        return TDReport(False, "T1", v, f"graph vertex {vertex_token(v)} lies in no part")
    for (u, v) in host.sorted_edges():
        if not any(u in p and v in p for p in td.parts.values()):
            return TDReport(False, "T2", (u, v), f"edge {vertex_token(u)}-{vertex_token(v)} lies in no part")
    for v in host.sorted_vertices():
        nodes = td.nodes_containing(v)
        sub = induced_subgraph(td.tree, nodes)
        if len(components(sub)) != 1:
            return TDReport(False, "T3", v, f"nodes containing {vertex_token(v)} are not connected in the tree")
    return TDReport(True, message="valid tree-decomposition")


def adhesion_sets(td: TreeDecomposition) -> dict:
    """Canonical tree edge -> V_t ∩ V_t'."""
    return {
        (t1, t2): td.parts[t1] & td.parts[t2]
        for (t1, t2) in td.tree.sorted_edges()
    }


def adhesion(td: TreeDecomposition) -> int:
    sets = adhesion_sets(td)
    return max((len(s) for s in sets.values()), default=0)


def width(td: TreeDecomposition) -> int:
    return max(len(p) for p in td.parts.values()) - 1


@dataclass(frozen=True)
class Torso:
    base: frozenset
    graph: Graph


def torso(host: Graph, td: TreeDecomposition, t) -> Torso:
    """Induced subgraph on V_t plus clique edges on each adhesion set at t."""
    part = td.part(t)
    g = induced_subgraph(host, part)
    extra = []
    for t2 in td.tree.neighbors(t):
        adh = sort_vertices(part & td.parts[t2])
        for i in range(len(adh)):
            for j in range(i + 1, len(adh)):
                if not g.adjacent(adh[i], adh[j]):
                    extra.append((adh[i], adh[j]))
    return Torso(part, add_edges(g, extra))


def edge_separation(host: Graph, td: TreeDecomposition, edge: tuple) -> Separation:
    """The separation of the host induced by removing a tree edge."""
    t1, t2 = edge
    e = canonical_edge(t1, t2)
    if e not in td.tree.edges:
        raise StructuralError(f"{edge!r} is not a tree edge")
    cut = Graph.build(
        [f for f in td.tree.edges if f != e],
        vertices=td.tree.vertices,
    )
    side1 = distances_from(cut, [t1]).keys()
    side2 = td.tree.vertices - set(side1)
    a = frozenset().union(*(td.parts[t] for t in side1))
    b = frozenset().union(*(td.parts[t] for t in side2))
    return Separation.of(a, b)


# ---------------------------------------------------------------------------
# treewidth
# ---------------------------------------------------------------------------


def exact_treewidth(g: Graph, cap: int = DEFAULT_TREEWIDTH_CAP) -> int:
    """Exact treewidth by dynamic programming over vertex subsets.

    Uses the elimination-order formulation: tw(G) = min over orders of the
    maximum back-degree, computed as a subset DP.  Exponential in |V|, hence
    the cap.
    """
    n = len(g.vertices)
    if n > cap:
        raise CapacityError(f"graph has {n} vertices, exact treewidth cap is {cap}")
    if n == 0:
        return -1
    verts = g.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for (u, v) in g.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]

    full = (1 << n) - 1

    def q(s: int, v: int) -> int:
        # Neighbours of the component of v in G[s | {v}], outside s and v.
        comp = 1 << v
        frontier = 1 << v
        inside = s | (1 << v)
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                i = low.bit_length() - 1
                f ^= low
                nxt |= adj[i]
            nxt &= inside & ~comp
            comp |= nxt
            frontier = nxt
        reach = 0
        c = comp
        while c:
            low = c & -c
            i = low.bit_length() - 1
            c ^= low
            reach |= adj[i]
        return bin(reach & ~inside).count("1")

    f = [0] * (1 << n)
    f[0] = -1
    for s in range(1, 1 << n):
        best = n
        t = s
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            rest = s ^ low
            val = max(f[rest], q(rest, v))
            if val < best:
                best = val
        f[s] = best
    return f[full]


def heuristic_td(g: Graph) -> TreeDecomposition:
    """Min-degree elimination tree-decomposition (deterministic tie-breaks).

    Tree nodes are the elimination indices 0..n-1; node i's part is the
    eliminated vertex plus its neighbours at elimination time.
    """
    verts = g.sorted_vertices()
    if not verts:
        return TreeDecomposition(Graph.build(vertices=[0]), {0: frozenset()})
    live = {v: set(g.neighbors(v)) for v in verts}
    order: list[Vertex] = []
    bags: list[frozenset] = []
    while live:
        v = min(live, key=lambda x: (len(live[x]), vertex_key(x)))
        nbrs = live.pop(v)
        order.append(v)
        bags.append(frozenset({v} | nbrs))
        for a in nbrs:
            live[a].discard(v)
            for b in nbrs:
                if a != b:
                    live[a].add(b)
    pos = {v: i for i, v in enumerate(order)}
    edges = []
    for i, bag in enumerate(bags):
        later = [pos[w] for w in bag if pos[w] > i]
        if later:
            edges.append((i, min(later)))
        elif i + 1 < len(bags):
            # Bag with no later vertices (end of a component): keep T connected.
            edges.append((i, i + 1))
    return TreeDecomposition(
        Graph.build(edges, vertices=range(len(bags))),
        {i: bags[i] for i in range(len(bags))},
    )


# ---------------------------------------------------------------------------
# contraction, clique subtrees, centers
# ---------------------------------------------------------------------------


def contract_td_edges(td: TreeDecomposition, keep: Iterable[tuple]) -> tuple[TreeDecomposition, dict]:
    """Contract every tree edge not in ``keep``; merged parts are unions.

    Returns the contracted decomposition and a map original node -> new node.
    New node identifiers are the key-minimal members of their merged class.
    """
    keep_set = {canonical_edge(*e) for e in keep}
    unknown = keep_set - td.tree.edges
    if unknown:
        raise StructuralError(f"keep contains non-tree edges: {sorted(unknown, key=str)!r}")
    parent: dict = {t: t for t in td.tree.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in td.tree.sorted_edges():
        if e not in keep_set:
            a, b = find(e[0]), find(e[1])
            if a != b:
                parent[a] = b
    classes: dict = {}
    for t in td.tree.vertices:
        classes.setdefault(find(t), set()).add(t)
    rep = {}
    for root, members in classes.items():
        r = min(members, key=vertex_key)
        for m in members:
            rep[m] = r
    new_parts: dict = {}
    for t, p in td.parts.items():
        new_parts.setdefault(rep[t], frozenset())
        new_parts[rep[t]] |= p
    new_edges = [(rep[a], rep[b]) for (a, b) in keep_set]
    new_tree = Graph.build(new_edges, vertices=new_parts.keys())
    return TreeDecomposition(new_tree, new_parts), rep


def clique_subtree(td: TreeDecomposition, s: Iterable[Vertex]) -> Graph:
    """The subgraph of T induced on {t : S ⊆ V_t}.

    For S an adhesion set this is a non-empty subtree by (T3); for arbitrary S
    it may be empty or disconnected, which callers should treat as an error.
    """
    sset = frozenset(s)
    if not sset:
        raise EmptySetError("clique subtree of the empty set is the whole tree; pass a non-empty set")
    nodes = [t for t in td.tree.sorted_vertices() if sset <= td.parts[t]]
    return induced_subgraph(td.tree, nodes)


@dataclass(frozen=True)
class TreeCenter:
    kind: str  # "vertex" or "edge"
    location: object  # a tree node, or a canonical node pair


def tree_center(tree: Graph) -> TreeCenter:
    """Central vertex or central edge of a tree, by iterated leaf removal.

    Every automorphism of the tree fixes the centre (as a vertex, or an edge
    setwise), which is what makes it usable as a canonical attachment point.
    """
    _check_is_tree(tree)
    remaining = set(tree.vertices)
    deg = {v: tree.degree(v) for v in remaining}
    while len(remaining) > 2:
        leaves = [v for v in remaining if deg[v] <= 1]
        for v in leaves:
            remaining.discard(v)
            for w in tree.neighbors(v):
                if w in remaining:
                    deg[w] -= 1
    rest = sort_vertices(remaining)
    if len(rest) == 1:
        return TreeCenter("vertex", rest[0])
    return TreeCenter("edge", canonical_edge(rest[0], rest[1]))


# ---------------------------------------------------------------------------
# JSON round-trip
# ---------------------------------------------------------------------------


def td_to_dict(td: TreeDecomposition) -> dict:
    return {
        "tree_edges": [[a, b] for (a, b) in td.tree.sorted_edges()],
        "parts": {vertex_token(t): sort_vertices(p) for t, p in sorted(td.parts.items(), key=lambda kv: vertex_key(kv[0]))},
    }


def td_from_dict(data: dict) -> TreeDecomposition:
    if not isinstance(data, dict) or "tree_edges" not in data or "parts" not in data:
        raise StructuralError("tree-decomposition JSON must have keys 'tree_edges' and 'parts'")
    parts = {}
    for key, vs in data["parts"].items():
        node = parse_vertex_token(key) if isinstance(key, str) else key
        if not isinstance(vs, list):
            raise StructuralError(f"part {key!r} must be a list of vertices")
        parts[node] = frozenset(tuple(v) if isinstance(v, list) else v for v in vs)
    edges = []
    for e in data["tree_edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise StructuralError(f"tree edge {e!r} must be a pair")
        edges.append(tuple(e))
    tree = Graph.build(edges, vertices=parts.keys())
    return TreeDecomposition(tree, parts)
