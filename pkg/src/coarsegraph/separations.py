"""Separations of a graph, tightness, and bounded-order enumeration.

A separation of G is a pair (A, B) of vertex sets with A ∪ B = V(G) such that
no edge joins A∖B to B∖A.  Its separator is A ∩ B and its order is |A ∩ B|.
A separation is *tight* if there are components C_A ⊆ G[A∖B] and C_B ⊆ G[B∖A]
whose neighbourhoods are both exactly A ∩ B.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import StructuralError
from .graph import Graph, Vertex, components, induced_subgraph, neighborhood, sort_vertices, vertex_key


def _side_key(side: frozenset):
    return tuple(vertex_key(v) for v in sort_vertices(side))


@dataclass(frozen=True)
class Separation:
    """A separation with sides stored in canonical order (smaller side first)."""

    side_a: frozenset
    side_b: frozenset

    @classmethod
    def of(cls, side_a: Iterable[Vertex], side_b: Iterable[Vertex]) -> "Separation":
        a = frozenset(side_a)
        b = frozenset(side_b)
        if _side_key(a) > _side_key(b):
            a, b = b, a
        return cls(a, b)

    @property
    def separator(self) -> frozenset:
        return self.side_a & self.side_b

    @property
    def order(self) -> int:
        return len(self.separator)

    def flip(self) -> "Separation":
        # Canonical order makes flip a no-op; kept for call-site clarity.
        return Separation.of(self.side_b, self.side_a)


def is_separation(g: Graph, sep: Separation) -> bool:
    """Checks the defining conditions: sides cover V(G), no edge crosses strictly."""
    a, b = sep.side_a, sep.side_b
    if a | b != g.vertices:
        return False
    only_a = a - b
    only_b = b - a
    for (u, v) in g.edges:
        if (u in only_a and v in only_b) or (u in only_b and v in only_a):
            return False
    return True


def fully_attached_components(g: Graph, s: Iterable[Vertex]) -> list[frozenset]:
    """Components C of G − S with N(C) exactly S, in canonical order."""
    sset = frozenset(s)
    for v in sset:
        g.require_vertex(v)
    rest = induced_subgraph(g, g.vertices - sset)
    out = []
    for comp in components(rest):
        if neighborhood(g, comp) == sset:
            out.append(comp)
    return out


def is_tight(g: Graph, sep: Separation) -> bool:
    """Tightness: each strict side contains a component whose neighbourhood is the
    whole separator."""
    if not is_separation(g, sep):
        raise StructuralError("not a separation of the given graph")
    s = sep.separator
    rest = induced_subgraph(g, g.vertices - s)
    found_a = found_b = False
    for comp in components(rest):
        if neighborhood(g, comp) != s:
            continue
        if comp <= sep.side_a:
            found_a = True
        elif comp <= sep.side_b:
            found_b = True
    return found_a and found_b


def separation_from_separator(g: Graph, s: Iterable[Vertex], a_components: Iterable[frozenset]) -> Separation:
    """The separation whose strict A-side is the given union of components of G − S."""
    sset = frozenset(s)
    a_side = set(sset)
    for comp in a_components:
        a_side |= comp
    b_side = (g.vertices - a_side) | sset
    return Separation.of(a_side, b_side)


def enumerate_tight(g: Graph, k: int) -> list[Separation]:
    """All tight separations of order exactly k, deduplicated and canonically sorted.

    Every separation (A, B) has A∖B equal to a union of components of
    G − (A∩B), so iterating over separator k-subsets and component
    bipartitions is exhaustive.  Tightness then requires each strict side to
    absorb at least one fully attached component; all remaining components may
    go to either side.
    """
    if k < 0 or k > len(g.vertices):
        raise StructuralError("order must be between 0 and |V|")
    verts = g.sorted_vertices()
    seen: set[Separation] = set()
    out: list[Separation] = []
    for combo in combinations(verts, k):
        s = frozenset(combo)
        rest = induced_subgraph(g, g.vertices - s)
        comps = components(rest)
        full = [c for c in comps if neighborhood(g, c) == s]
        if len(full) < 2:
            continue
        other = [c for c in comps if neighborhood(g, c) != s]
        # Assign each component to side A (bit 1) or side B (bit 0).
        all_comps = full + other
        n = len(all_comps)
        nf = len(full)
        for mask in range(2 ** n):
            full_bits = [(mask >> i) & 1 for i in range(nf)]
            if not (0 in full_bits and 1 in full_bits):
                continue
            a_comps = [all_comps[i] for i in range(n) if (mask >> i) & 1]
            sep = separation_from_separator(g, s, a_comps)
            if sep in seen:
                continue
            seen.add(sep)
            out.append(sep)
    out.sort(key=lambda sp: (sp.order, _side_key(sp.separator), _side_key(sp.side_a), _side_key(sp.side_b)))
    return out


def separation_to_dict(sep: Separation) -> dict:
    return {
        "A": sort_vertices(sep.side_a),
        "B": sort_vertices(sep.side_b),
    }


def separation_from_dict(data: dict) -> Separation:
    if not isinstance(data, dict) or "A" not in data or "B" not in data:
        raise StructuralError("separation JSON must have keys 'A' and 'B'")
    return Separation.of(data["A"], data["B"])
