"""Planarity verdicts and forbidden-subdivision witnesses."""

from __future__ import annotations

import random
from dataclasses import replace

from hypothesis import given, settings
from hypothesis import strategies as st

from coarsegraph.generators import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    grid_graph,
)
from coarsegraph.graph import Graph
from coarsegraph.planarity import (
    SubdivisionWitness,
    find_subdivision,
    is_planar,
    validate_subdivision,
)

import oracles


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(outer + spokes + inner)


def prism(n: int) -> Graph:
    ring = [(("a", i), ("a", (i + 1) % n)) for i in range(n)]
    ring += [(("b", i), ("b", (i + 1) % n)) for i in range(n)]
    rungs = [(("a", i), ("b", i)) for i in range(n)]
    return Graph.build(ring + rungs)


def test_planar_families():
    for g in (complete_graph(4), grid_graph(4, 5), cycle_graph(9), prism(3), prism(6)):
        verdict = is_planar(g)
        assert verdict.planar
        assert verdict.witness is None
    # Exhaustively certifying the absence of a subdivision is only cheap on
    # small graphs, so the direct search is spot-checked there.
    for g in (complete_graph(4), grid_graph(3, 3), prism(3)):
        assert find_subdivision(g) is None


def test_k5_witness():
    verdict = is_planar(complete_graph(5))
    assert not verdict.planar
    assert verdict.witness is not None and verdict.witness.kind == "K5"
    assert validate_subdivision(complete_graph(5), verdict.witness)


def test_k33_witness():
    g = complete_bipartite_graph(3, 3)
    verdict = is_planar(g)
    assert not verdict.planar
    assert verdict.witness is not None and verdict.witness.kind == "K33"
    assert validate_subdivision(g, verdict.witness)


def test_petersen_witness_is_a_k33_subdivision():
    """Every vertex has degree 3, so no K5 subdivision fits; the witness must
    be of the bipartite kind."""
    g = petersen()
    verdict = is_planar(g)
    assert not verdict.planar
    assert verdict.witness is not None and verdict.witness.kind == "K33"
    assert validate_subdivision(g, verdict.witness)


def test_witness_cap_suppresses_search():
    verdict = is_planar(complete_graph(5), witness_cap=0)
    assert not verdict.planar
    assert verdict.witness is None


def test_tampered_witnesses_are_rejected():
    g = complete_graph(5)
    w = is_planar(g).witness
    assert w is not None
    truncated = replace(w, paths=(w.paths[0][:-1],) + w.paths[1:])
    assert not validate_subdivision(g, truncated)
    doubled = replace(w, branch_vertices=(w.branch_vertices[0],) + w.branch_vertices[:-1])
    assert not validate_subdivision(g, doubled)
    mislabeled = replace(w, kind="K33")
    assert not validate_subdivision(g, mislabeled)
    assert not validate_subdivision(g, replace(w, kind="K7"))


def test_witness_paths_are_internally_disjoint():
    g = petersen()
    w = is_planar(g).witness
    seen: set = set()
    for path in w.paths:
        interior = set(path[1:-1])
        assert not (interior & seen)
        assert not (interior & set(w.branch_vertices))
        seen |= interior


@settings(max_examples=50, deadline=None)
@given(st.integers(4, 9), st.integers(0, 10_000))
def test_verdict_matches_subdivision_search(n, seed):
    """On small graphs the boolean verdict and the witness search agree, and
    any produced witness validates."""
    rng = random.Random(seed)
    vs, es = oracles.random_graph(rng, n, 0.55)
    g = Graph.build(es, vertices=vs)
    verdict = is_planar(g)
    w = find_subdivision(g)
    assert verdict.planar == (w is None)
    if w is not None:
        assert validate_subdivision(g, w)
