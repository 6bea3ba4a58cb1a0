"""Exact packing/covering for injective timefunctions via max flow.

When no label repeats, snapshot-disjointness degenerates to edge-
disjointness, and both the packing and the covering collapse to a classic
max-flow/min-cut pair on a time-expanded network: one layer per label,
waiting arcs between consecutive layers, and a unit-capacity inner arc per
edge (undirected edges become a small in/out gadget usable from either
endpoint).  The same network without the injectivity requirement computes
the maximum number of pairwise edge-disjoint temporal paths of an
arbitrary temporal graph.

networkx's Edmonds–Karp implementation does the flow work; this module
owns the network shape, the deterministic walk decomposition, and the
translation of the minimum cut back into time labels.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .core import TemporalGraph, TemporalWalk, reachable
from .errors import MalformedInput, NotInjective, UnknownVertex

_SRC = ("src",)
_SNK = ("snk",)


@dataclass(frozen=True)
class InjectiveResult:
    """Packing number, witness family, and a minimum snapshot cut — the
    two optima coincide on injective instances."""

    value: int
    family: tuple
    cut_labels: frozenset


@dataclass(frozen=True)
class EdgeDisjointResult:
    value: int
    family: tuple


def _check(g: TemporalGraph, s, z):
    if s not in g.vertices:
        raise UnknownVertex(s)
    if z not in g.vertices:
        raise UnknownVertex(z)
    if s == z:
        raise MalformedInput("terminals must be distinct")


def _expanded_network(g: TemporalGraph, s, z) -> tuple:
    layers = sorted(g.labels)
    index = {t: i for i, t in enumerate(layers)}
    big = len(g.edges) + 1
    net = nx.DiGraph()
    net.add_edge(_SRC, ("v", s, 0), capacity=big)
    for x in sorted(g.vertices, key=str):
        for i in range(len(layers) - 1):
            net.add_edge(("v", x, i), ("v", x, i + 1), capacity=big)
    for i in range(len(layers)):
        net.add_edge(("v", z, i), _SNK, capacity=big)
    for e in g.sorted_edges():
        i = index[e.t]
        inn, out = ("in", e.eid), ("out", e.eid)
        net.add_edge(inn, out, capacity=1)
        for x in (e.u, e.v):
            net.add_edge(("v", x, i), inn, capacity=big)
            net.add_edge(out, ("v", x, i), capacity=big)
    return net, index


def _trace_units(net, flow_dict, value: int, g: TemporalGraph) -> list:
    """Split a flow of the given value into unit src→snk walks.

    Each unit greedily follows the first flow-carrying arc in insertion
    order (the network is built deterministically), decrementing as it
    goes; attached same-layer cycles are walked through and removed later
    by path shortcutting.
    """
    remaining = {u: dict(vs) for u, vs in flow_dict.items()}
    walks = []
    for _ in range(value):
        node = _SRC
        nodes = [node]
        while node != _SNK:
            for succ in net[node]:
                if remaining[node].get(succ, 0) > 0:
                    remaining[node][succ] -= 1
                    node = succ
                    nodes.append(node)
                    break
            else:
                raise AssertionError("flow conservation broke during tracing")
        verts = [nodes[1][1]]
        edges = []
        at = 2
        while at < len(nodes):
            kind = nodes[at][0]
            if kind == "in":
                e = g.edge(nodes[at][1])
                landing = nodes[at + 2]
                edges.append(e)
                verts.append(landing[1])
                at += 3
            else:
                at += 1
        walks.append(TemporalWalk(tuple(verts), tuple(edges)))
    return walks


def _shortcut(walk: TemporalWalk) -> TemporalWalk:
    """Remove cycles: the edge subsequence between two visits of the same
    vertex can be dropped without breaking label monotonicity."""
    verts = list(walk.vertices)
    edges = list(walk.edges)
    while True:
        seen: dict = {}
        loop = None
        for i, v in enumerate(verts):
            if v in seen:
                loop = (seen[v], i)
                break
            seen[v] = i
        if loop is None:
            return TemporalWalk(tuple(verts), tuple(edges))
        i, j = loop
        del verts[i + 1 : j + 1]
        del edges[i:j]


def max_edge_disjoint_paths(g: TemporalGraph, s, z) -> EdgeDisjointResult:
    """Maximum family of pairwise edge-disjoint temporal s,z-paths, for
    any temporal graph (labels may repeat)."""
    _check(g, s, z)
    if reachable(g, s, z) is None:
        return EdgeDisjointResult(0, ())
    net, _ = _expanded_network(g, s, z)
    value, flow_dict = nx.maximum_flow(net, _SRC, _SNK, flow_func=edmonds_karp)
    walks = _trace_units(net, flow_dict, value, g)
    family = tuple(_shortcut(w) for w in walks)
    used: set = set()
    for path in family:
        assert path.is_path and path.first == s and path.last == z
        assert not (set(path.edge_ids) & used), "paths must be edge disjoint"
        used |= set(path.edge_ids)
    return EdgeDisjointResult(value, family)


def injective_connectivity(g: TemporalGraph, s, z) -> InjectiveResult:
    """Packing = covering for an injective instance, with both witnesses.

    Raises :class:`NotInjective` if any label repeats.  The family comes
    from the flow decomposition; the cut collects the labels of the edges
    whose unit arcs cross the minimum cut (all crossings are unit arcs
    because every other arc's capacity exceeds the flow value).
    """
    _check(g, s, z)
    seen: set = set()
    for e in g.edges:
        if e.t in seen:
            raise NotInjective(e.t)
        seen.add(e.t)
    if reachable(g, s, z) is None:
        return InjectiveResult(0, (), frozenset())
    net, _ = _expanded_network(g, s, z)
    value, flow_dict = nx.maximum_flow(net, _SRC, _SNK, flow_func=edmonds_karp)
    walks = _trace_units(net, flow_dict, value, g)
    family = tuple(_shortcut(w) for w in walks)
    cut_value, (side_s, side_t) = nx.minimum_cut(net, _SRC, _SNK, flow_func=edmonds_karp)
    assert cut_value == value
    labels = set()
    side_s = set(side_s)
    for u in side_s:
        for v in net[u]:
            if v not in side_s:
                assert u[0] == "in" and v[0] == "out", "cut must cross unit arcs"
                labels.add(g.edge(u[1]).t)
    cut = frozenset(labels)
    assert len(cut) == value, "injective labels make the cut size the flow value"
    assert reachable(g.without_labels(cut), s, z) is None
    taken: set = set()
    for path in family:
        assert not (path.label_set & taken), "family must be snapshot disjoint"
        taken |= path.label_set
    return InjectiveResult(value, family, cut)
