"""The planar-quotient engine.

Input: a host graph with a tree-decomposition of adhesion ≤ 3 whose torsos
fall into three classes — small ("finite" at truncation scale), treewidth ≤ k,
or planar.  Output: a planar graph H built by replacing each small torso by a
point, each bounded-treewidth torso by its decomposition tree, and each planar
torso by its pruned parts, all glued through one hub vertex x_S per adhesion
set — together with the vertex map φ, instance bounds B₁…B₅, and a
self-verification report (planarity, connectivity, γ=1 quasi-isometry slack,
hub cut-vertex structure).

"Infinite" has no finite-scale meaning, so truncated inputs carry marker
vertices (e.g. the boundary sphere of a Cayley ball); a component counts as
infinite iff it meets a marker.  Without markers the largest component is kept
and a warning recorded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import (
    ClassificationError,
    ContractViolationError,
    EmptySetError,
    MarkerError,
    PlanarityContradictionError,
    StructuralError,
)
from .graph import (
    Graph,
    components,
    distances_from,
    induced_subgraph,
    is_connected,
    parse_vertex_token,
    sort_vertices,
    vertex_key,
    vertex_token,
)
from . import planarity, qi, treedecomp
from .separations import fully_attached_components, is_tight
from .treedecomp import (
    DEFAULT_TREEWIDTH_CAP,
    TreeCenter,
    TreeDecomposition,
    adhesion_sets,
    clique_subtree,
    contract_td_edges,
    edge_separation,
    exact_treewidth,
    heuristic_td,
    torso,
    tree_center,
    td_from_dict,
    td_to_dict,
    validate,
    width,
)

FINITE = "finite"
BOUNDED_TW = "bounded-treewidth"
PLANAR = "planar"
TORSO_KINDS = (FINITE, BOUNDED_TW, PLANAR)

DEFAULT_FINITE_THRESHOLD = 8


@dataclass(frozen=True)
class InstanceBundle:
    host: Graph
    td: TreeDecomposition
    k: int
    classification: dict | None = None
    infinite_markers: frozenset = frozenset()
    sub_tds: dict = field(default_factory=dict)  # tree node -> TreeDecomposition of its torso
    finite_threshold: int = DEFAULT_FINITE_THRESHOLD


def validate_bundle(bundle: InstanceBundle) -> None:
    report = validate(bundle.host, bundle.td)
    if not report.ok:
        raise StructuralError(f"tree-decomposition invalid: ({report.axiom}) {report.message}")
    adh = treedecomp.adhesion(bundle.td)
    if adh > 3:
        raise ContractViolationError(f"adhesion {adh} exceeds 3")
    if bundle.k < 0:
        raise ContractViolationError("k must be non-negative")
    for v in bundle.infinite_markers:
        bundle.host.require_vertex(v)


# ---------------------------------------------------------------------------
# torso classification
# ---------------------------------------------------------------------------


def treewidth_at_most(g: Graph, k: int, cap: int = DEFAULT_TREEWIDTH_CAP) -> bool:
    """Decide tw(g) ≤ k: exactly below the cap, by reduction rules above it.

    Above the cap only k ≤ 2 is decidable exactly (forest test, series-parallel
    reduction); for larger k a heuristic width ≤ k certifies the upper bound
    and anything else raises rather than guessing.
    """
    n = len(g.vertices)
    if n <= cap:
        return exact_treewidth(g, cap) <= k
    if k <= 0:
        return not g.edges
    if k == 1:
        return len(g.edges) == len(g.vertices) - len(components(g))
    if k == 2:
        return _reducible_to_empty_by_sp_rules(g)
    if width(heuristic_td(g)) <= k:
        return True
    raise ContractViolationError(
        f"cannot decide treewidth ≤ {k} for a {n}-vertex graph above the exact cap {cap}"
    )


def _reducible_to_empty_by_sp_rules(g: Graph) -> bool:
    # tw ≤ 2 iff the graph reduces to nothing under: drop degree-≤1 vertices,
    # bypass degree-2 vertices (adding the shortcut edge).
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    queue = set(adj)
    while queue:
        v = queue.pop()
        if v not in adj:
            continue
        deg = len(adj[v])
        if deg > 2:
            continue
        if deg == 2:
            a, b = sorted(adj[v], key=vertex_key)
            adj[a].discard(v)
            adj[b].discard(v)
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
            queue.update((a, b))
        else:
            for w in adj[v]:
                adj[w].discard(v)
                queue.add(w)
        del adj[v]
    # Removing low-degree vertices can unlock others; loop until stable.
    while True:
        low = [v for v in adj if len(adj[v]) <= 2]
        if not low:
            break
        for v in sorted(low, key=vertex_key):
            if v not in adj:
                continue
            ns = sorted(adj[v], key=vertex_key)
            if len(ns) == 2:
                a, b = ns
                adj[a].discard(v)
                adj[b].discard(v)
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
            else:
                for w in ns:
                    adj[w].discard(v)
            del adj[v]
    return not adj


def classify_torsos(
    host: Graph,
    td: TreeDecomposition,
    k: int,
    finite_threshold: int = DEFAULT_FINITE_THRESHOLD,
    tw_cap: int = DEFAULT_TREEWIDTH_CAP,
) -> dict:
    """Label each part finite / bounded-treewidth / planar, in that precedence."""
    out: dict = {}
    for t in td.tree.sorted_vertices():
        part = td.parts[t]
        if len(part) <= finite_threshold:
            out[t] = FINITE
            continue
        tg = torso(host, td, t).graph
        if treewidth_at_most(tg, k, cap=tw_cap):
            out[t] = BOUNDED_TW
            continue
        if planarity.is_planar(tg, witness_cap=0).planar:
            out[t] = PLANAR
            continue
        raise ClassificationError(
            f"torso at {t!r} is neither small (≤ {finite_threshold}), nor of treewidth ≤ {k}, nor planar"
        )
    return out


def check_classification(host: Graph, td: TreeDecomposition, k: int, classification: dict,
                         finite_threshold: int = DEFAULT_FINITE_THRESHOLD,
                         tw_cap: int = DEFAULT_TREEWIDTH_CAP) -> None:
    """A supplied classification must still be *consistent* with the torsos."""
    if set(classification) != set(td.tree.vertices):
        raise StructuralError("classification must label exactly the tree nodes")
    for t, kind in classification.items():
        if kind not in TORSO_KINDS:
            raise StructuralError(f"unknown torso class {kind!r} at {t!r}")
        if kind == FINITE and len(td.parts[t]) > finite_threshold:
            raise ClassificationError(f"part at {t!r} has {len(td.parts[t])} vertices, above the threshold {finite_threshold}")
        if kind == BOUNDED_TW and not treewidth_at_most(torso(host, td, t).graph, k, cap=tw_cap):
            raise ClassificationError(f"torso at {t!r} does not have treewidth ≤ {k}")
        if kind == PLANAR and not planarity.is_planar(torso(host, td, t).graph, witness_cap=0).planar:
            raise ClassificationError(f"torso at {t!r} is not planar")


# ---------------------------------------------------------------------------
# sub-decompositions and planar refinement
# ---------------------------------------------------------------------------


def _prepare_sub_td(torso_graph: Graph, provided: TreeDecomposition | None, adhesion_cap: int | None) -> TreeDecomposition:
    """Validate a supplied sub-decomposition, or build one (min-degree, then
    contract every edge whose separation is not tight or too wide)."""
    if provided is not None:
        rep = validate(torso_graph, provided)
        if not rep.ok:
            raise ContractViolationError(f"sub-decomposition invalid: ({rep.axiom}) {rep.message}")
        for e in provided.tree.sorted_edges():
            sep = edge_separation(torso_graph, provided, e)
            if adhesion_cap is not None and sep.order > adhesion_cap:
                raise ContractViolationError(f"sub-decomposition adhesion {sep.order} exceeds {adhesion_cap}")
            if not is_tight(torso_graph, sep):
                raise ContractViolationError(f"sub-decomposition edge {e!r} has a non-tight separation")
        return provided
    td = heuristic_td(torso_graph)
    keep = []
    for e in td.tree.sorted_edges():
        sep = edge_separation(torso_graph, td, e)
        if adhesion_cap is not None and sep.order > adhesion_cap:
            continue
        if is_tight(torso_graph, sep):
            keep.append(e)
    contracted, _ = contract_td_edges(td, keep)
    return contracted


@dataclass(frozen=True)
class PlanarRefinement:
    contracted: TreeDecomposition
    kept: dict           # contracted node s -> pruned part graph G_s'
    deletions: tuple     # (s, S, size of deleted component)
    deleted_site: dict   # deleted host vertex -> S of its (first) pruning site
    max_deleted: int
    warnings: tuple


def refine_planar_torso(
    torso_graph: Graph,
    sub_td: TreeDecomposition,
    outer_sets: Iterable[frozenset],
    markers: frozenset = frozenset(),
) -> PlanarRefinement:
    """Contract the sub-decomposition down to size-3 outer separators, then
    prune, per part and per remaining outer adhesion set S, every fully
    attached component except the designated "infinite" one."""
    outer = sorted({frozenset(s) for s in outer_sets if s}, key=lambda s: tuple(sorted(map(vertex_key, s))))
    size3 = {s for s in outer if len(s) == 3}
    keep = [e for e, a in adhesion_sets(sub_td).items() if a in size3]
    contracted, _ = contract_td_edges(sub_td, keep)
    contracted_adh = set(adhesion_sets(contracted).values())
    kept: dict = {}
    deletions: list = []
    deleted_site: dict = {}
    warnings: list = []
    for s in contracted.tree.sorted_vertices():
        g_cur = torso(torso_graph, contracted, s).graph
        original_part = contracted.parts[s]
        for S in outer:
            if not S <= original_part:
                continue
            if S in contracted_adh:
                continue
            if not S <= g_cur.vertices:
                warnings.append(f"adhesion set {sorted(map(str, S))} partly pruned away in part {s!r}; skipped")
                continue
            cands = fully_attached_components(g_cur, S)
            if len(S) == 3 and len(cands) > 2:
                raise PlanarityContradictionError(
                    f"{len(cands)} components fully attached to a 3-separator in a planar torso"
                )
            if len(cands) < 2:
                continue
            if markers:
                marked = [c for c in cands if c & markers]
                if not marked:
                    raise MarkerError(f"no component at {sorted(map(str, S))} meets the infinite markers")
                if len(marked) > 1:
                    raise MarkerError(f"{len(marked)} components at {sorted(map(str, S))} meet the infinite markers")
                keep_comp = marked[0]
            else:
                keep_comp = max(cands, key=lambda c: (len(c), tuple(sorted(map(vertex_key, c)))))
                warnings.append(
                    f"no infinite markers: keeping the largest component at {sorted(map(str, S))} in part {s!r}"
                )
            for c in cands:
                if c is keep_comp:
                    continue
                deletions.append((s, S, len(c)))
                for v in sort_vertices(c):
                    deleted_site.setdefault(v, S)
                g_cur = induced_subgraph(g_cur, g_cur.vertices - c)
        kept[s] = g_cur
    max_deleted = max((size for (_, _, size) in deletions), default=0)
    return PlanarRefinement(contracted, kept, tuple(deletions), deleted_site, max_deleted, tuple(warnings))


def tw_torso_attachment(sub_td: TreeDecomposition, S: frozenset) -> TreeCenter:
    """Attachment point for an adhesion set inside a bounded-treewidth torso:
    the center of the subtree of nodes whose parts contain all of S."""
    try:
        sub = clique_subtree(sub_td, S)
    except EmptySetError:
        raise ContractViolationError("adhesion set is empty") from None
    if not sub.vertices:
        raise ContractViolationError(f"adhesion set {sorted(map(str, S))} is contained in no part of the sub-decomposition")
    return tree_center(sub)


# ---------------------------------------------------------------------------
# the glue
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    b1: int
    b2: int
    b3: int
    b4: int
    b5: int
    b: int


@dataclass(frozen=True)
class ConstructionOutput:
    H: Graph
    phi: dict
    bounds: Bounds
    provenance: dict
    classification: dict
    finite_threshold: int
    warnings: tuple


def _xs_name(S: frozenset) -> tuple:
    return ("xS",) + tuple(sort_vertices(S))


def build_H(bundle: InstanceBundle) -> ConstructionOutput:
    validate_bundle(bundle)
    host, td = bundle.host, bundle.td
    classification = bundle.classification
    if classification is None:
        classification = classify_torsos(host, td, bundle.k, bundle.finite_threshold)
    else:
        check_classification(host, td, bundle.k, classification, bundle.finite_threshold)

    warnings: list = []
    torsos = {t: torso(host, td, t) for t in td.tree.vertices}
    all_adh = adhesion_sets(td)
    distinct_adh = sorted(
        {s for s in all_adh.values() if s},
        key=lambda s: tuple(sorted(map(vertex_key, s))),
    )
    if any(not s for s in all_adh.values()):
        warnings.append("empty adhesion set: the corresponding tree edge contributes no gluing vertex")

    vertices: list = []
    edges: list = []
    provenance: dict = {}

    # (i) one hub vertex per adhesion set
    for S in distinct_adh:
        x = _xs_name(S)
        vertices.append(x)
        provenance[x] = {"kind": "adhesion-set", "set": sort_vertices(S)}

    # (ii) one vertex per finite torso
    for t in td.tree.sorted_vertices():
        if classification[t] == FINITE:
            x = ("xt", t)
            vertices.append(x)
            provenance[x] = {"kind": "finite-torso", "node": t}

    # (iii) decomposition-tree copies for bounded-treewidth torsos
    sub_tds: dict = {}
    for t in td.tree.sorted_vertices():
        if classification[t] != BOUNDED_TW:
            continue
        sub = _prepare_sub_td(torsos[t].graph, bundle.sub_tds.get(t), adhesion_cap=None)
        sub_tds[t] = sub
        for s in sub.tree.sorted_vertices():
            x = ("tw", t, s)
            vertices.append(x)
            provenance[x] = {"kind": "tree-copy", "node": t, "tree_node": s}
        for (s1, s2) in sub.tree.sorted_edges():
            edges.append((("tw", t, s1), ("tw", t, s2)))

    # (iv) pruned planar part-torsos
    refinements: dict = {}
    for t in td.tree.sorted_vertices():
        if classification[t] != PLANAR:
            continue
        sub = _prepare_sub_td(torsos[t].graph, bundle.sub_tds.get(t), adhesion_cap=3)
        outer = [S for S in distinct_adh if S <= td.parts[t]]
        ref = refine_planar_torso(torsos[t].graph, sub, outer, bundle.infinite_markers)
        refinements[t] = ref
        warnings.extend(ref.warnings)
        for s in ref.contracted.tree.sorted_vertices():
            g = ref.kept[s]
            for v in g.sorted_vertices():
                x = ("pl", t, s, v)
                vertices.append(x)
                provenance[x] = {"kind": "planar-copy", "node": t, "part": s, "vertex": v}
            for (u, v) in g.sorted_edges():
                edges.append(((("pl", t, s, u)), ("pl", t, s, v)))

    # (v)-(vii) gluing edges through the hubs
    for S in distinct_adh:
        x = _xs_name(S)
        for t in td.tree.sorted_vertices():
            if not S <= td.parts[t]:
                continue
            kind = classification[t]
            if kind == FINITE:
                edges.append((x, ("xt", t)))
            elif kind == BOUNDED_TW:
                center = tw_torso_attachment(sub_tds[t], S)
                if center.kind == "vertex":
                    edges.append((x, ("tw", t, center.location)))
                else:
                    s1, s2 = center.location
                    edges.append((x, ("tw", t, s1)))
                    edges.append((x, ("tw", t, s2)))
            else:
                ref = refinements[t]
                for s in ref.contracted.tree.sorted_vertices():
                    g = ref.kept[s]
                    if S <= g.vertices:
                        for v in sort_vertices(S):
                            edges.append((x, ("pl", t, s, v)))

    H = Graph.build(edges, vertices=vertices)

    # φ: surviving planar copy > adhesion hub > torso image
    phi: dict = {}
    copy_of: dict = {}
    for t in sorted(refinements, key=vertex_key):
        ref = refinements[t]
        for s in ref.contracted.tree.sorted_vertices():
            for v in ref.kept[s].vertices:
                copy_of.setdefault(v, ("pl", t, s, v))
    hub_of: dict = {}
    for S in distinct_adh:
        for v in sort_vertices(S):
            hub_of.setdefault(v, _xs_name(S))
    deleted_hub: dict = {}
    for t in sorted(refinements, key=vertex_key):
        for v, S in refinements[t].deleted_site.items():
            deleted_hub.setdefault(v, _xs_name(S))
    for v in host.sorted_vertices():
        if v in copy_of:
            phi[v] = copy_of[v]
        elif v in hub_of:
            phi[v] = hub_of[v]
        else:
            nodes = sorted(td.nodes_containing(v), key=vertex_key)
            t = nodes[0]
            kind = classification[t]
            if kind == FINITE:
                phi[v] = ("xt", t)
            elif kind == BOUNDED_TW:
                s = min((s for s in sub_tds[t].parts if v in sub_tds[t].parts[s]), key=vertex_key)
                phi[v] = ("tw", t, s)
            else:
                if v not in deleted_hub:
                    raise StructuralError(f"no image for planar-torso vertex {v!r}")  # construction bug guard
                phi[v] = deleted_hub[v]
    for v in host.vertices:
        if phi[v] not in H.vertices:
            raise StructuralError(f"phi({v!r}) is not a vertex of H")  # construction bug guard

    bounds = _compute_bounds(td, classification, torsos, sub_tds, refinements)
    return ConstructionOutput(
        H=H,
        phi=phi,
        bounds=bounds,
        provenance=provenance,
        classification=dict(classification),
        finite_threshold=bundle.finite_threshold,
        warnings=tuple(warnings),
    )


def _compute_bounds(td, classification, torsos, sub_tds, refinements) -> Bounds:
    b1 = max((len(td.parts[t]) for t, k in classification.items() if k == FINITE), default=0)
    b2 = max((width(sub_tds[t]) for t in sub_tds), default=0)
    b3 = 0
    b4 = 0
    for t in sub_tds:
        tg = torsos[t].graph
        sub = sub_tds[t]
        for s in sub.tree.vertices:
            part = sub.parts[s]
            diam = 0
            for u in part:
                dist = distances_from(tg, [u])
                for v in part:
                    d = dist.get(v, math.inf)
                    if d == math.inf:
                        raise StructuralError(
                            f"part of the sub-decomposition at {t!r} is not connected within its torso"
                        )
                    diam = max(diam, d)
            b3 = max(b3, diam)
        for v in td.parts[t]:
            b4 = max(b4, sum(1 for s in sub.parts if v in sub.parts[s]))
    b5 = 1 + max((refinements[t].max_deleted for t in refinements), default=0) if refinements else 0
    b = max(b1, b3 * b4, b5)
    return Bounds(b1, b2, b3, b4, b5, b)


# ---------------------------------------------------------------------------
# self-verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    planar: bool
    connectivity_ok: bool
    qi_checked: bool
    qi_valid: bool | None
    c: Fraction | None
    bound: int
    marker_tolerance: int
    c_within_bound: bool | None
    cut_vertex_failures: tuple
    failures: tuple
    passed: bool


def verify_output(bundle: InstanceBundle, out: ConstructionOutput) -> VerificationReport:
    failures: list = []
    planar_ok = planarity.is_planar(out.H, witness_cap=0).planar
    if not planar_ok:
        failures.append("H is not planar")
    conn_ok = is_connected(out.H) == is_connected(bundle.host)
    if not conn_ok:
        failures.append("H connectivity does not match the host")

    qi_checked = conn_ok and is_connected(bundle.host) and bool(bundle.host.vertices)
    qi_valid = None
    c = None
    tolerance = 3 if bundle.infinite_markers else 0
    within = None
    if qi_checked:
        _, c = qi.tightest_constants(bundle.host, out.H, out.phi, fixed_gamma=1)
        cert = qi.make_certificate(bundle.host, out.H, out.phi, Fraction(1), c)
        qi_valid = cert.valid
        if not qi_valid:
            failures.append("γ=1 certificate invalid at its own tightest c")
        within = c <= out.bounds.b + tolerance
        if not within:
            failures.append(f"tightest c = {c} exceeds B = {out.bounds.b} (+{tolerance} marker tolerance)")

    cut_failures: list = []
    base_comps = len(components(out.H))
    for x, rec in sorted(out.provenance.items(), key=lambda kv: vertex_key(kv[0])):
        if rec.get("kind") != "adhesion-set":
            continue
        if out.H.degree(x) < 2:
            continue
        without = induced_subgraph(out.H, out.H.vertices - {x})
        if len(components(without)) <= base_comps:
            cut_failures.append(x)
    if cut_failures:
        failures.append(f"{len(cut_failures)} adhesion hub(s) fail to separate their attachment sides")

    return VerificationReport(
        planar=planar_ok,
        connectivity_ok=conn_ok,
        qi_checked=qi_checked,
        qi_valid=qi_valid,
        c=c,
        bound=out.bounds.b,
        marker_tolerance=tolerance,
        c_within_bound=within,
        cut_vertex_failures=tuple(cut_failures),
        failures=tuple(failures),
        passed=not failures,
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def bundle_to_dict(bundle: InstanceBundle) -> dict:
    data: dict = {
        "k": bundle.k,
        "finite_threshold": bundle.finite_threshold,
        "td": td_to_dict(bundle.td),
    }
    if bundle.classification is not None:
        data["classification"] = {
            vertex_token(t): bundle.classification[t]
            for t in sort_vertices(bundle.classification)
        }
    if bundle.infinite_markers:
        data["markers"] = [vertex_token(v) for v in sort_vertices(bundle.infinite_markers)]
    if bundle.sub_tds:
        data["sub_tds"] = {
            vertex_token(t): td_to_dict(bundle.sub_tds[t]) for t in sort_vertices(bundle.sub_tds)
        }
    return data


def bundle_from_dict(data: dict, host: Graph) -> InstanceBundle:
    classification = None
    if "classification" in data:
        classification = {parse_vertex_token(t): kind for t, kind in data["classification"].items()}
    markers = frozenset(parse_vertex_token(t) for t in data.get("markers", []))
    sub_tds = {parse_vertex_token(t): td_from_dict(d) for t, d in data.get("sub_tds", {}).items()}
    return InstanceBundle(
        host=host,
        td=td_from_dict(data["td"]),
        k=int(data["k"]),
        classification=classification,
        infinite_markers=markers,
        sub_tds=sub_tds,
        finite_threshold=int(data.get("finite_threshold", DEFAULT_FINITE_THRESHOLD)),
    )


def _provenance_record_to_dict(rec: dict) -> dict:
    out: dict = {"kind": rec["kind"]}
    for key in ("node", "tree_node", "part", "vertex"):
        if key in rec:
            out[key] = vertex_token(rec[key])
    if "set" in rec:
        out["set"] = [vertex_token(v) for v in rec["set"]]
    return out


def output_to_dict(out: ConstructionOutput) -> dict:
    return {
        "h_edges": [[vertex_token(u), vertex_token(v)] for u, v in out.H.sorted_edges()],
        "h_isolated": [
            vertex_token(v) for v in out.H.sorted_vertices() if out.H.degree(v) == 0
        ],
        "phi": {vertex_token(v): vertex_token(out.phi[v]) for v in sort_vertices(out.phi)},
        "bounds": {
            "b1": out.bounds.b1,
            "b2": out.bounds.b2,
            "b3": out.bounds.b3,
            "b4": out.bounds.b4,
            "b5": out.bounds.b5,
            "b": out.bounds.b,
        },
        "classification": {
            vertex_token(t): out.classification[t] for t in sort_vertices(out.classification)
        },
        "finite_threshold": out.finite_threshold,
        "provenance": {
            vertex_token(x): _provenance_record_to_dict(out.provenance[x])
            for x in sort_vertices(out.provenance)
        },
        "warnings": list(out.warnings),
    }


def report_to_dict(rep: VerificationReport) -> dict:
    return {
        "planar": rep.planar,
        "connectivity_ok": rep.connectivity_ok,
        "qi_checked": rep.qi_checked,
        "qi_valid": rep.qi_valid,
        "c": None if rep.c is None else str(rep.c),
        "bound": rep.bound,
        "marker_tolerance": rep.marker_tolerance,
        "c_within_bound": rep.c_within_bound,
        "cut_vertex_failures": [vertex_token(x) for x in rep.cut_vertex_failures],
        "failures": list(rep.failures),
        "passed": rep.passed,
    }
