"""Quasi-isometry certification for explicit vertex maps.

A map φ: V(G) → V(H) is a (γ, c)-quasi-isometry when
(i)  (1/γ)·d_G(u,v) − c ≤ d_H(φu, φv) ≤ γ·d_G(u,v) + c for all u, v, and
(ii) every vertex of H lies within distance c of the image of φ.

Constants are exact ``fractions.Fraction`` values so the boundary cases are
decided without rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping

from .errors import CompositionError, GraphToolError, StructuralError, UnknownVertexError
from .graph import Graph, Vertex, distances_from, is_connected, sort_vertices


class ConnectivityError(GraphToolError, ValueError):
    """Infinite distances would enter the verification and per-component mode is off."""


@dataclass(frozen=True)
class QuasiIsometryCertificate:
    source: Graph
    target: Graph
    phi: dict
    gamma: Fraction
    c: Fraction
    valid: bool
    worst_witness: tuple | None  # pair of source vertices, or a lone target vertex

    def __post_init__(self):
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.gamma < 1:
            raise StructuralError("gamma must be ≥ 1")
        if self.c < 0:
            raise StructuralError("c must be ≥ 0")


def _check_map(source: Graph, target: Graph, phi: Mapping) -> None:
    for v in source.vertices:
        if v not in phi:
            raise StructuralError(f"phi is not total: missing {v!r}")
        if phi[v] not in target.vertices:
            raise UnknownVertexError(repr(phi[v]))


def _pair_tables(g: Graph) -> dict:
    return {v: distances_from(g, [v]) for v in g.vertices}


def _slacks(source: Graph, target: Graph, phi: Mapping, per_component: bool):
    """Yield the data qi checks need: per-pair (d_G, d_H) and per-target-vertex
    distance to the image.  Raises ConnectivityError when infinities appear and
    per_component is off; in per-component mode infinite-d_G pairs are skipped
    and every target vertex must still reach the image."""
    _check_map(source, target, phi)
    src_tables = _pair_tables(source)
    image = sorted({phi[v] for v in source.vertices}, key=str)
    image_dist = distances_from(target, image) if image else {}
    tgt_tables: dict = {}
    verts = source.sorted_vertices()
    pairs = []
    for i, u in enumerate(verts):
        du = src_tables[u]
        hu = phi[u]
        if hu not in tgt_tables:
            tgt_tables[hu] = distances_from(target, [hu])
        for v in verts[i + 1:]:
            dg = du.get(v, math.inf)
            dh = tgt_tables[hu].get(phi[v], math.inf)
            if dg == math.inf:
                if per_component:
                    continue
                raise ConnectivityError(f"{u!r} and {v!r} are in different components of the source")
            if dh == math.inf and not per_component:
                raise ConnectivityError(f"images of {u!r} and {v!r} are in different components of the target")
            pairs.append((u, v, dg, dh))
    density = []
    for w in target.sorted_vertices():
        dist = image_dist.get(w, math.inf)
        if dist == math.inf and not per_component:
            raise ConnectivityError(f"target vertex {w!r} cannot reach the image")
        density.append((w, dist))
    return pairs, density


def qi_verify(cert: QuasiIsometryCertificate, per_component: bool = False) -> tuple[bool, tuple | None]:
    """Check conditions (i) and (ii) for the certificate's (gamma, c).

    Returns (ok, witness): the witness is the first violating vertex pair or a
    lone target vertex violating density, None when valid.
    """
    gamma, c = cert.gamma, cert.c
    pairs, density = _slacks(cert.source, cert.target, cert.phi, per_component)
    for (u, v, dg, dh) in pairs:
        if dh == math.inf:
            # Only reachable in per-component mode: a finite source distance
            # must never map to an infinite target distance.
            return False, (u, v)
        if Fraction(dh) > gamma * dg + c:
            return False, (u, v)
        if Fraction(dh) < Fraction(dg) / gamma - c:
            return False, (u, v)
    for (w, dist) in density:
        if dist == math.inf or Fraction(dist) > c:
            return False, (w,)
    return True, None


def make_certificate(
    source: Graph,
    target: Graph,
    phi: Mapping,
    gamma,
    c,
    per_component: bool = False,
) -> QuasiIsometryCertificate:
    cert = QuasiIsometryCertificate(source, target, dict(phi), Fraction(gamma), Fraction(c), False, None)
    ok, witness = qi_verify(cert, per_component=per_component)
    if ok:
        witness = _worst_slack_witness(cert, per_component)
    return replace(cert, valid=ok, worst_witness=witness)


def _worst_slack_witness(cert: QuasiIsometryCertificate, per_component: bool = False) -> tuple | None:
    """The pair (or density vertex) with the least margin before violation."""
    gamma, c = cert.gamma, cert.c
    pairs, density = _slacks(cert.source, cert.target, cert.phi, per_component)
    worst = None
    worst_margin = None
    for (u, v, dg, dh) in pairs:
        if dh == math.inf:
            continue
        margin = min(gamma * dg + c - dh, Fraction(dh) - Fraction(dg) / gamma + c)
        if worst_margin is None or margin < worst_margin:
            worst_margin = margin
            worst = (u, v)
    for (w, dist) in density:
        if dist == math.inf:
            continue
        margin = c - dist
        if worst_margin is None or margin < worst_margin:
            worst_margin = margin
            worst = (w,)
    return worst


def tightest_constants(
    source: Graph,
    target: Graph,
    phi: Mapping,
    fixed_gamma=None,
    per_component: bool = False,
) -> tuple[Fraction, Fraction] | None:
    """The minimal constants making φ a quasi-isometry.

    With ``fixed_gamma``: the unique smallest c valid at that γ.  Without it:
    the smallest γ admitting a finite c, then the smallest such c.  On finite
    inputs every total map with all relevant distances finite is a (1, c)-
    quasi-isometry for c large enough, so the γ-minimisation always returns
    γ = 1; the candidate-ratio scan a continuous setting would need collapses.
    Returns None only in per-component mode, when some finite source distance
    maps to an infinite target distance (no c can fix that).
    """
    if fixed_gamma is None:
        gamma = Fraction(1)
    else:
        gamma = Fraction(fixed_gamma)
        if gamma < 1:
            raise StructuralError("gamma must be ≥ 1")
    pairs, density = _slacks(source, target, phi, per_component)
    c = Fraction(0)
    for (u, v, dg, dh) in pairs:
        if dh == math.inf:
            return None
        c = max(c, Fraction(dh) - gamma * dg, Fraction(dg) / gamma - Fraction(dh))
    for (w, dist) in density:
        if dist == math.inf:
            return None
        c = max(c, Fraction(dist))
    return gamma, c


def qi_compose(f: QuasiIsometryCertificate, g: QuasiIsometryCertificate) -> QuasiIsometryCertificate:
    """Certificate for g ∘ f with conservatively combined constants, re-tightened.

    Conservative constants: γ = γ₁γ₂ and c = γ₂c₁ + 2c₂ (the path through an
    intermediate image point costs one extra c₂ in the density argument).
    """
    if f.target != g.source:
        raise CompositionError("target of the first certificate must equal source of the second")
    if not (f.valid and g.valid):
        raise CompositionError("can only compose valid certificates")
    phi = {v: g.phi[f.phi[v]] for v in f.source.vertices}
    gamma = f.gamma * g.gamma
    c = g.gamma * f.c + 2 * g.c
    tight = tightest_constants(f.source, g.target, phi, fixed_gamma=gamma)
    if tight is not None and tight[1] < c:
        c = tight[1]
    return make_certificate(f.source, g.target, phi, gamma, c)


# ---------------------------------------------------------------------------
# JSON round-trip
# ---------------------------------------------------------------------------


def _fraction_str(x: Fraction) -> str:
    return str(x)  # "p/q" or "p"


def parse_fraction(text) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise StructuralError(f"not a rational number: {text!r}") from exc


def certificate_to_dict(cert: QuasiIsometryCertificate) -> dict:
    from .graph import vertex_token

    return {
        "phi": {vertex_token(v): vertex_token(cert.phi[v]) for v in cert.source.sorted_vertices()},
        "gamma": _fraction_str(cert.gamma),
        "c": _fraction_str(cert.c),
        "valid": cert.valid,
        "witness": list(cert.worst_witness) if cert.worst_witness else [],
    }
