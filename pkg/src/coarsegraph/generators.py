"""Deterministic graph families, including Cayley-graph balls via word rewriting.

Cayley balls come with *markers*: the sphere of maximal radius, standing in
for "grows to infinity" when a truncated ball feeds the planar-quotient
pipeline.  Non-Cayley families have empty markers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import GeneratorError
from .graph import Graph

CAYLEY_PRESETS = ("free-group-rank-2", "integer-lattice-Z2", "free-product-Z2-Z3")
FAMILIES = ("path", "cycle", "grid", "complete", "complete-bipartite", "tree", "cayley-ball")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    markers: frozenset  # boundary sphere for cayley balls, else empty


def path_graph(n: int) -> Graph:
    _positive(n, "n")
    return Graph.build([(i, i + 1) for i in range(n - 1)], vertices=range(n))


def cycle_graph(n: int) -> Graph:
    _positive(n, "n")
    if n < 3:
        raise GeneratorError("cycle needs n ≥ 3")
    return Graph.build([(i, (i + 1) % n) for i in range(n)])


def grid_graph(rows: int, cols: int) -> Graph:
    _positive(rows, "rows")
    _positive(cols, "cols")
    def name(r, c):
        return f"{r},{c}"
    edges = []
    for r in range(rows):
        for c in range(cols):
            if r + 1 < rows:
                edges.append((name(r, c), name(r + 1, c)))
            if c + 1 < cols:
                edges.append((name(r, c), name(r, c + 1)))
    return Graph.build(edges, vertices=[name(r, c) for r in range(rows) for c in range(cols)])


def complete_graph(n: int) -> Graph:
    _positive(n, "n")
    return Graph.build([(i, j) for i in range(n) for j in range(i + 1, n)], vertices=range(n))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    _positive(a, "a")
    _positive(b, "b")
    left = [f"l{i}" for i in range(a)]
    right = [f"r{i}" for i in range(b)]
    return Graph.build([(l, r) for l in left for r in right])


def tree_graph(branching: int, depth: int) -> Graph:
    """Complete rooted tree: every non-leaf has `branching` children."""
    _positive(branching, "branching")
    if depth < 0:
        raise GeneratorError("depth must be non-negative")
    edges = []
    vertices = ["r"]
    frontier = ["r"]
    for _ in range(depth):
        nxt = []
        for parent in frontier:
            for i in range(branching):
                child = f"{parent}.{i}" if parent != "r" else f"{i}"
                edges.append((parent, child))
                vertices.append(child)
                nxt.append(child)
        frontier = nxt
    return Graph.build(edges, vertices=vertices)


# ---------------------------------------------------------------------------
# Cayley balls
# ---------------------------------------------------------------------------
# Each preset defines: identity word, generator alphabet, and a normal-form
# right-multiplication word -> word.  Balls are breadth-first over words.


def _free2_multiply(word: str, g: str) -> str:
    inverse = {"a": "A", "A": "a", "b": "B", "B": "b"}
    if word and word[-1] == inverse[g]:
        return word[:-1]
    return word + g


def _z2_multiply(word: str, g: str) -> str:
    x, y = (int(t) for t in word.split(","))
    dx, dy = {"e": (1, 0), "w": (-1, 0), "n": (0, 1), "s": (0, -1)}[g]
    return f"{x + dx},{y + dy}"


def _zz_multiply(word: str, g: str) -> str:
    # Free product <a | a²> * <b | b³>: syllables over {a, b, B} with B = b².
    # Normal form: no "aa", no adjacent b-syllables.
    merge_b = {("b", "b"): "B", ("b", "B"): "", ("B", "b"): "", ("B", "B"): "b"}
    if not word:
        return g
    last = word[-1]
    if g == "a":
        return word[:-1] if last == "a" else word + g
    if last in ("b", "B"):
        merged = merge_b[(last, g)]
        return word[:-1] + merged
    return word + g


_PRESETS = {
    "free-group-rank-2": ("", ("a", "b", "A", "B"), _free2_multiply),
    "integer-lattice-Z2": ("0,0", ("e", "w", "n", "s"), _z2_multiply),
    "free-product-Z2-Z3": ("", ("a", "b", "B"), _zz_multiply),
}


def cayley_ball(preset: str, radius: int) -> GeneratedGraph:
    """Ball of the given radius around the identity, markers = outer sphere.

    Vertices are normal-form words; the group identity is rendered "e" (the
    empty word is not a usable identifier).
    """
    if preset not in _PRESETS:
        raise GeneratorError(f"unknown cayley preset {preset!r}; choose from {', '.join(CAYLEY_PRESETS)}")
    if radius < 0:
        raise GeneratorError("radius must be non-negative")
    identity, gens, mult = _PRESETS[preset]

    def render(word: str) -> str:
        return word if word else "e"

    dist = {identity: 0}
    queue = deque([identity])
    edges = []
    while queue:
        w = queue.popleft()
        for g in gens:
            w2 = mult(w, g)
            if w2 == w:
                continue
            if w2 not in dist:
                if dist[w] == radius:
                    continue  # edge would leave the ball
                dist[w2] = dist[w] + 1
                queue.append(w2)
            edges.append((render(w), render(w2)))
    graph = Graph.build(edges, vertices=[render(w) for w in dist])
    markers = frozenset(render(w) for w, d in dist.items() if d == radius)
    return GeneratedGraph(graph, markers)


def _positive(value: int, name: str) -> None:
    if not isinstance(value, int) or value <= 0:
        raise GeneratorError(f"{name} must be a positive integer")


def generate(spec: GeneratorSpec) -> GeneratedGraph:
    fam = spec.family
    p = spec.params
    try:
        if fam == "path":
            return GeneratedGraph(path_graph(p["n"]), frozenset())
        if fam == "cycle":
            return GeneratedGraph(cycle_graph(p["n"]), frozenset())
        if fam == "grid":
            return GeneratedGraph(grid_graph(p["rows"], p["cols"]), frozenset())
        if fam == "complete":
            return GeneratedGraph(complete_graph(p["n"]), frozenset())
        if fam == "complete-bipartite":
            return GeneratedGraph(complete_bipartite_graph(p["a"], p["b"]), frozenset())
        if fam == "tree":
            return GeneratedGraph(tree_graph(p["branching"], p["depth"]), frozenset())
        if fam == "cayley-ball":
            return cayley_ball(p["preset"], p["radius"])
    except KeyError as exc:
        raise GeneratorError(f"family {fam!r} is missing parameter {exc.args[0]!r}") from None
    raise GeneratorError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
