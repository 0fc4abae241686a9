"""Separations: canonical form, tightness, exhaustive enumeration."""

from __future__ import annotations

import random

import pytest

from coarsegraph.errors import StructuralError
from coarsegraph.generators import cycle_graph, path_graph
from coarsegraph.graph import Graph
from coarsegraph.separations import (
    Separation,
    enumerate_tight,
    fully_attached_components,
    is_separation,
    is_tight,
    separation_from_dict,
    separation_from_separator,
    separation_to_dict,
)

import oracles


def as_plain_pairs(seps):
    return {frozenset((s.side_a, s.side_b)) for s in seps}


def test_canonical_form_is_order_independent():
    s1 = Separation.of({1, 2, 3}, {3, 4})
    s2 = Separation.of({3, 4}, {1, 2, 3})
    assert s1 == s2
    assert s1.separator == frozenset({3})
    assert s1.order == 1
    assert s1.flip() == s1


def test_is_separation_detects_crossing_edges():
    g = cycle_graph(4)
    assert is_separation(g, Separation.of({0, 1, 3}, {1, 2, 3}))
    assert not is_separation(g, Separation.of({0, 1}, {2, 3}))
    assert not is_separation(g, Separation.of({0, 1, 2}, {2}))


def test_theta_graph_has_three_fully_attached_components():
    """Two hubs joined by three internally disjoint paths."""
    g = Graph.build([("u", 1), (1, "v"), ("u", 2), (2, "v"), ("u", 3), (3, "v")])
    comps = fully_attached_components(g, {"u", "v"})
    assert len(comps) == 3
    assert all(len(c) == 1 for c in comps)


def test_tightness_on_c5():
    g = cycle_graph(5)
    non_adjacent = separation_from_separator(g, {0, 2}, [frozenset({1})])
    assert is_tight(g, non_adjacent)
    adjacent = separation_from_separator(g, {0, 1}, [])
    assert not is_tight(g, adjacent)


def test_is_tight_requires_a_separation():
    g = cycle_graph(4)
    with pytest.raises(StructuralError):
        is_tight(g, Separation.of({0, 1}, {2, 3}))


def test_enumerate_tight_frozen_counts():
    """C5 at order 2 -> the five non-adjacent pairs; P5 at order 1 -> the
    three interior vertices; C6 at order 2 -> nine (six distance-2 pairs,
    three antipodal pairs)."""
    assert len(enumerate_tight(cycle_graph(5), 2)) == 5
    assert len(enumerate_tight(path_graph(5), 1)) == 3
    assert len(enumerate_tight(cycle_graph(6), 2)) == 9


def test_enumerate_tight_is_exact_order():
    for sep in enumerate_tight(cycle_graph(6), 2):
        assert sep.order == 2


def test_enumerate_matches_exhaustive_oracle_tiny():
    """Full 3^n side-assignment scan on graphs small enough to afford it."""
    rng = random.Random(31)
    for _ in range(25):
        vs, es = oracles.random_graph(rng, rng.randint(2, 5), 0.5)
        g = Graph.build(es, vertices=vs)
        adj = oracles.adjacency(es, vs)
        for k in (1, 2):
            assert as_plain_pairs(enumerate_tight(g, k)) == oracles.tight_separations_exhaustive(adj, k)


def test_enumerate_matches_definitional_oracle():
    rng = random.Random(32)
    for _ in range(30):
        vs, es = oracles.random_graph(rng, rng.randint(3, 7), 0.4)
        g = Graph.build(es, vertices=vs)
        adj = oracles.adjacency(es, vs)
        for k in (1, 2, 3):
            assert as_plain_pairs(enumerate_tight(g, k)) == oracles.tight_separations_definitional(adj, k)


def test_dict_round_trip():
    sep = Separation.of({1, 2}, {2, 3, 4})
    assert separation_from_dict(separation_to_dict(sep)) == sep
    with pytest.raises(StructuralError):
        separation_from_dict({"A": [1]})
