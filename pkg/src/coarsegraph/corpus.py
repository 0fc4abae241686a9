"""A reproducible instance corpus for the planar-quotient engine.

Each instance is a ready-to-build bundle: host graph, outer tree-decomposition
of adhesion ≤ 3, treewidth budget k, and (where meaningful) truncation markers
or pinned sub-decompositions.  Families cover every torso class and every
gluing rule: trees of small cliques, single bounded-treewidth cycles, bare
grids, grids with clique pockets at a face, pruning instances with a deletable
pocket behind a separator, two grids bridged through a small torso, mixed
chains, and truncated Cayley balls.

Ten instances are marked symmetric and carry an explicit automorphism of the
bundle (a vertex relabeling plus a tree-node relabeling) for equivariance
checks.  The corpus is deterministic given a seed; the default seed comes from
the COARSE_GRAPH_SEED environment variable.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass

from .construction import InstanceBundle
from .generators import cayley_ball, cycle_graph, grid_graph
from .graph import Graph, add_edges, relabel, sort_vertices, union
from .treedecomp import TreeDecomposition

DEFAULT_SEED = 20240817


def default_seed() -> int:
    raw = os.environ.get("COARSE_GRAPH_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"COARSE_GRAPH_SEED must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    bundle: InstanceBundle
    symmetric: bool = False
    # For symmetric instances: (vertex relabeling, tree-node relabeling),
    # together an automorphism of the bundle.
    relabeling: tuple | None = None


def _single_node_td(vertices, node=0) -> TreeDecomposition:
    return TreeDecomposition(Graph.build((), [node]), {node: frozenset(vertices)})


def _clique(vertices) -> list:
    vs = sort_vertices(vertices)
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


def _pick_glue(rng: random.Random, parent_part: frozenset, taken: list) -> frozenset:
    """A glue set from the parent part that is not properly nested with any
    existing adhesion set.  (Nested adhesion sets let one hub bypass another,
    defeating the hub-separates-its-sides property; equal sets merge into one
    hub and are fine.)"""
    pool = sort_vertices(parent_part)

    def ok(cand: frozenset) -> bool:
        return not any(cand < s or s < cand for s in taken)

    for _ in range(40):
        cand = frozenset(rng.sample(pool, rng.randint(1, 3)))
        if ok(cand):
            return cand
    for a in (1, 2, 3):
        for combo in itertools.combinations(pool, a):
            cand = frozenset(combo)
            if ok(cand):
                return cand
    raise RuntimeError("no usable glue set")


def _clique_tree_instance(rng: random.Random, idx: int) -> CorpusInstance:
    """A tree of overlapping cliques; every torso is small."""
    m = rng.randint(2, 4)
    parent = {i: rng.randrange(i) for i in range(1, m)}
    parts: dict = {}
    sizes = [rng.randint(4, 8) for _ in range(m)]
    first = frozenset(range(sizes[0]))
    counter = sizes[0]
    parts[0] = first
    edges: list = list(_clique(first))
    adhesions: list = []
    for i in range(1, m):
        glue = _pick_glue(rng, parts[parent[i]], adhesions)
        adhesions.append(glue)
        fresh = list(range(counter, counter + max(sizes[i] - len(glue), 1)))
        counter += len(fresh)
        parts[i] = glue | frozenset(fresh)
        edges.extend(_clique(parts[i]))
    host = Graph.build(edges)
    tree = Graph.build([(parent[i], i) for i in range(1, m)], vertices=range(m))
    bundle = InstanceBundle(host, TreeDecomposition(tree, parts), k=2)
    return CorpusInstance(f"clique-tree-{idx:02d}", bundle)


def _cycle_instance(n: int) -> CorpusInstance:
    host = cycle_graph(n)
    bundle = InstanceBundle(host, _single_node_td(host.vertices, "t"), k=2)
    return CorpusInstance(f"cycle-{n}", bundle)


def _grid_instance(r: int, c: int) -> CorpusInstance:
    host = grid_graph(r, c)
    bundle = InstanceBundle(host, _single_node_td(host.vertices, "t"), k=2)
    return CorpusInstance(f"grid-{r}x{c}", bundle)


def _face_triple(i: int, j: int) -> frozenset:
    return frozenset({f"{i},{j}", f"{i},{j + 1}", f"{i + 1},{j}"})


def _grid_k4_instance(r: int, c: int, i: int, j: int) -> CorpusInstance:
    """A grid with a K4 pocket attached along one face triple."""
    grid = grid_graph(r, c)
    s = _face_triple(i, j)
    host = add_edges(grid, [("q", v) for v in sort_vertices(s)])
    tree = Graph.build([("g", "k")])
    td = TreeDecomposition(tree, {"g": grid.vertices, "k": s | {"q"}})
    return CorpusInstance(f"grid-k4-{r}x{c}-at-{i}-{j}", InstanceBundle(host, td, k=2))


def _pocket_instance(m: int, marked: bool) -> CorpusInstance:
    """A 3×m grid with a deletable pocket vertex behind the first column.

    The pocket p and the main grid body are both fully attached to the column
    separator, so the refinement must prune one of them: the markers (or, in
    the unmarked variant, the size comparison) single out the body.
    """
    grid = grid_graph(3, m)
    s = frozenset({f"{i},0" for i in range(3)})
    extra = [("p", v) for v in sort_vertices(s)] + [("q", v) for v in sort_vertices(s)]
    host = add_edges(grid, extra)
    tree = Graph.build([("g", "k")])
    part_g = grid.vertices | {"p"}
    td = TreeDecomposition(tree, {"g": part_g, "k": s | {"q"}})
    markers = frozenset(f"{i},{m - 1}" for i in range(3)) if marked else frozenset()
    name = f"pocket-3x{m}-{'marked' if marked else 'plain'}"
    # The pinned trivial sub-decomposition keeps the column separator out of
    # the contracted adhesions, so the refinement really has to prune.
    sub = _single_node_td(part_g, node=0)
    return CorpusInstance(
        name, InstanceBundle(host, td, k=2, infinite_markers=markers, sub_tds={"g": sub})
    )


def _bridge_instance(n: int) -> CorpusInstance:
    """Two n×n grids joined through a small bridge torso on two face triples."""
    g1 = grid_graph(n, n)
    g2 = relabel(grid_graph(n, n), {v: f"b{v}" for v in grid_graph(n, n).vertices})
    s1 = _face_triple(0, 0)
    s2 = frozenset(f"b{v}" for v in _face_triple(0, 0))
    bridge = [(u, v) for u in sort_vertices(s1) for v in sort_vertices(s2)]
    host = add_edges(union(g1, g2), bridge)
    tree = Graph.build([("g1", "m"), ("m", "g2")])
    td = TreeDecomposition(tree, {"g1": g1.vertices, "m": s1 | s2, "g2": g2.vertices})
    return CorpusInstance(f"bridge-{n}", InstanceBundle(host, td, k=2))


def _mixed_instance(cycle_n: int, gr: int, gc: int) -> CorpusInstance:
    """Finite clique — cycle — grid, one torso of each class on a path."""
    cyc = cycle_graph(cycle_n)
    grid = grid_graph(gr, gc)
    hook = cycle_n // 2
    host = add_edges(union(cyc, grid), [("a", 0), ("a", 1), (hook, "0,0")])
    tree = Graph.build([("A", "B"), ("B", "C")])
    td = TreeDecomposition(
        tree,
        {"A": frozenset({"a", 0, 1}), "B": cyc.vertices, "C": grid.vertices | {hook}},
    )
    return CorpusInstance(f"mixed-c{cycle_n}-g{gr}x{gc}", InstanceBundle(host, td, k=2))


def _cayley_instance(preset: str, radius: int, finite_threshold: int = 8) -> CorpusInstance:
    ball = cayley_ball(preset, radius)
    bundle = InstanceBundle(
        ball.graph,
        _single_node_td(ball.graph.vertices, "t"),
        k=2,
        infinite_markers=ball.markers,
        finite_threshold=finite_threshold,
    )
    return CorpusInstance(f"cayley-{preset}-r{radius}", bundle)


# ---------------------------------------------------------------------------
# symmetric instances (with explicit bundle automorphisms)
# ---------------------------------------------------------------------------


def _sym_mirror_path(arm: int, a: int, idx: int) -> CorpusInstance:
    """Left clique — middle — right clique, mirror-symmetric."""
    left = [f"l{i}" for i in range(arm)]
    right = [f"r{i}" for i in range(arm)]
    sl = frozenset(left[-a:])
    sr = frozenset(right[-a:])
    mid = sl | sr | {"m0"}
    parts = {"L": frozenset(left), "M": mid, "R": frozenset(right)}
    edges = _clique(parts["L"]) + _clique(mid) + _clique(parts["R"])
    host = Graph.build(edges)
    tree = Graph.build([("L", "M"), ("M", "R")])
    sigma = {f"l{i}": f"r{i}" for i in range(arm)}
    sigma.update({f"r{i}": f"l{i}" for i in range(arm)})
    sigma["m0"] = "m0"
    tau = {"L": "R", "M": "M", "R": "L"}
    bundle = InstanceBundle(host, TreeDecomposition(tree, parts), k=2)
    return CorpusInstance(f"sym-mirror-{idx}", bundle, symmetric=True, relabeling=(sigma, tau))


def _sym_star(arms: int, idx: int) -> CorpusInstance:
    """Clique arms around a shared triangle, rotated by the automorphism."""
    z = ["z0", "z1", "z2"]
    parts: dict = {"Z": frozenset(z)}
    edges = _clique(z)
    for i in range(arms):
        arm = frozenset(z) | {f"a{i}x", f"a{i}y"}
        parts[f"A{i}"] = arm
        edges.extend(_clique(arm))
    host = Graph.build(edges)
    tree = Graph.build([("Z", f"A{i}") for i in range(arms)])
    sigma = {v: v for v in z}
    tau = {"Z": "Z"}
    for i in range(arms):
        j = (i + 1) % arms
        sigma[f"a{i}x"] = f"a{j}x"
        sigma[f"a{i}y"] = f"a{j}y"
        tau[f"A{i}"] = f"A{j}"
    bundle = InstanceBundle(host, TreeDecomposition(tree, parts), k=2)
    return CorpusInstance(f"sym-star-{idx}", bundle, symmetric=True, relabeling=(sigma, tau))


def _sym_cycle(n: int) -> CorpusInstance:
    """A single bounded-treewidth cycle with a pinned one-node sub-decomposition,
    rotated halfway around by the automorphism."""
    host = cycle_graph(n)
    td = _single_node_td(host.vertices, "t")
    sub = _single_node_td(host.vertices, 0)
    sigma = {v: (v + n // 2) % n for v in range(n)}
    tau = {"t": "t"}
    bundle = InstanceBundle(host, td, k=2, sub_tds={"t": sub})
    return CorpusInstance(f"sym-cycle-{n}", bundle, symmetric=True, relabeling=(sigma, tau))


def _sym_grid_k4(n: int) -> CorpusInstance:
    """A square grid with a K4 pocket at the corner face, transposed by the
    automorphism; the planar sub-decomposition is pinned to one node so the
    construction's vertex names relabel exactly."""
    grid = grid_graph(n, n)
    s = _face_triple(0, 0)
    host = add_edges(grid, [("q", v) for v in sort_vertices(s)])
    tree = Graph.build([("g", "k")])
    td = TreeDecomposition(tree, {"g": grid.vertices, "k": s | {"q"}})
    sigma = {f"{i},{j}": f"{j},{i}" for i in range(n) for j in range(n)}
    sigma["q"] = "q"
    tau = {"g": "g", "k": "k"}
    bundle = InstanceBundle(host, td, k=2, sub_tds={"g": _single_node_td(grid.vertices, 0)})
    return CorpusInstance(f"sym-grid-k4-{n}", bundle, symmetric=True, relabeling=(sigma, tau))


# ---------------------------------------------------------------------------
# the corpus
# ---------------------------------------------------------------------------


def corpus(seed: int | None = None) -> list[CorpusInstance]:
    if seed is None:
        seed = default_seed()
    rng = random.Random(seed)
    out: list[CorpusInstance] = []
    for idx in range(15):
        out.append(_clique_tree_instance(rng, idx))
    for n in range(12, 31, 2):
        out.append(_cycle_instance(n))
    for (r, c) in [(4, 4), (4, 5), (4, 6), (5, 5), (5, 6), (6, 6)]:
        out.append(_grid_instance(r, c))
    faces = [(0, 0), (0, 1), (1, 1), (2, 1)]
    for (r, c) in [(4, 4), (5, 5)]:
        for (i, j) in rng.sample(faces, 3):
            out.append(_grid_k4_instance(r, c, i, j))
    for m in (4, 5, 6):
        out.append(_pocket_instance(m, marked=True))
        out.append(_pocket_instance(m, marked=False))
    for n in (4, 5, 6):
        out.append(_bridge_instance(n))
    for (cn, gr, gc) in [(12, 4, 4), (14, 4, 5), (16, 5, 5), (18, 4, 6)]:
        out.append(_mixed_instance(cn, gr, gc))
    out.append(_cayley_instance("free-group-rank-2", 2))
    out.append(_cayley_instance("free-group-rank-2", 3))
    out.append(_cayley_instance("integer-lattice-Z2", 2))
    out.append(_cayley_instance("integer-lattice-Z2", 3))
    out.append(_cayley_instance("free-product-Z2-Z3", 2, finite_threshold=4))
    out.append(_cayley_instance("free-product-Z2-Z3", 3))
    out.append(_sym_mirror_path(4, 1, 0))
    out.append(_sym_mirror_path(5, 2, 1))
    out.append(_sym_mirror_path(6, 3, 2))
    out.append(_sym_mirror_path(7, 2, 3))
    out.append(_sym_star(3, 0))
    out.append(_sym_star(4, 1))
    out.append(_sym_cycle(12))
    out.append(_sym_cycle(16))
    out.append(_sym_grid_k4(4))
    out.append(_sym_grid_k4(5))
    if len({inst.name for inst in out}) != len(out):
        raise RuntimeError("corpus instance names must be unique")
    return out


def symmetric_instances(seed: int | None = None) -> list[CorpusInstance]:
    return [inst for inst in corpus(seed) if inst.symmetric]


def relabel_bundle(bundle: InstanceBundle, sigma: dict, tau: dict) -> InstanceBundle:
    """The bundle with host vertices renamed by sigma and tree nodes by tau.

    Sub-decomposition node names are kept; only the vertices inside their
    parts move.  Building the relabeled bundle must produce the renamed
    quotient of the original — that is what the symmetric instances check.
    """
    host = relabel(bundle.host, sigma)
    td = TreeDecomposition(
        relabel(bundle.td.tree, tau),
        {tau[t]: frozenset(sigma[v] for v in p) for t, p in bundle.td.parts.items()},
    )
    classification = None
    if bundle.classification is not None:
        classification = {tau[t]: kind for t, kind in bundle.classification.items()}
    sub_tds = {
        tau[t]: TreeDecomposition(
            sub.tree,
            {s: frozenset(sigma[v] for v in p) for s, p in sub.parts.items()},
        )
        for t, sub in bundle.sub_tds.items()
    }
    return InstanceBundle(
        host,
        td,
        bundle.k,
        classification=classification,
        infinite_markers=frozenset(sigma[v] for v in bundle.infinite_markers),
        sub_tds=sub_tds,
        finite_threshold=bundle.finite_threshold,
    )
