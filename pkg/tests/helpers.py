"""Shared test utilities that need package types (unlike the pure oracles)."""

from __future__ import annotations

from coarsegraph.construction import build_H
from coarsegraph.corpus import relabel_bundle
from coarsegraph.graph import relabel, sort_vertices


def rename_quotient_vertex(v: tuple, sigma: dict, tau: dict) -> tuple:
    """How a quotient vertex must move when the bundle is relabeled."""
    kind = v[0]
    if kind == "xS":
        return ("xS",) + tuple(sort_vertices(sigma[x] for x in v[1:]))
    if kind == "xt":
        return ("xt", tau[v[1]])
    if kind == "tw":
        return ("tw", tau[v[1]], v[2])
    if kind == "pl":
        return ("pl", tau[v[1]], v[2], sigma[v[3]])
    raise AssertionError(f"unexpected quotient vertex {v!r}")


def assert_equivariant(inst) -> None:
    """Building after relabeling equals relabeling the built quotient."""
    sigma, tau = inst.relabeling
    out1 = build_H(inst.bundle)
    out2 = build_H(relabel_bundle(inst.bundle, sigma, tau))
    rename = {v: rename_quotient_vertex(v, sigma, tau) for v in out1.H.vertices}
    assert relabel(out1.H, rename) == out2.H, inst.name
    for v in inst.bundle.host.vertices:
        assert out2.phi[sigma[v]] == rename[out1.phi[v]], (inst.name, v)
