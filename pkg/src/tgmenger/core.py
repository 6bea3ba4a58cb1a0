"""Temporal multigraphs and time-respecting traversal primitives.

A *temporal graph* here is an undirected multigraph together with a
timefunction assigning one positive integer label to every edge, under the
standing assumption that each snapshot is simple: parallel edges must carry
pairwise distinct labels.  Walks are *non-strict* — consecutive labels along
a walk may repeat but never decrease.

The module also provides :class:`MGraph`, the untimed multigraph skeleton
(vertices, links, multiplicities) used by the recognition machinery, plus
m-subdivision and a small-pattern topological-minor matcher that respects
multiplicities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

from .errors import (
    DecreasingLabel,
    LimitExceeded,
    MalformedInput,
    MissingMultiedge,
    NonIncident,
    PatternTooLarge,
    UnknownEdge,
    UnknownVertex,
)

INF = float("inf")

Vertex = Hashable
EdgeId = Hashable


def token_key(x):
    """Sort key that tolerates mixed vertex/edge-id types (ints before
    everything else, everything else by its string form)."""
    if isinstance(x, int) and not isinstance(x, bool):
        return (0, x, "")
    return (1, 0, str(x))


def link_key(u: Vertex, v: Vertex) -> tuple:
    """Canonical unordered representation of a vertex pair."""
    return (u, v) if token_key(u) <= token_key(v) else (v, u)


class Edge(NamedTuple):
    """One timed edge: identifier, the two endpoints, and the time label."""

    eid: EdgeId
    u: Vertex
    v: Vertex
    t: int

    def touches(self, x: Vertex) -> bool:
        return x == self.u or x == self.v

    def other(self, x: Vertex) -> Vertex:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise UnknownVertex(x)

    @property
    def pair(self) -> tuple:
        return link_key(self.u, self.v)


class TemporalGraph:
    """Undirected multigraph with integer time labels on edges.

    Parameters
    ----------
    edges:
        Iterable of ``(edge_id, u, v, t)`` tuples or :class:`Edge` values.
        Edge ids must be pairwise distinct, labels must be positive
        integers, loops are rejected, and parallel edges (same endpoints)
        must carry pairwise distinct labels so that every snapshot is a
        simple graph.
    vertices:
        Extra vertices to include beyond the edge endpoints (isolated
        vertices would otherwise be lost).

    Attributes
    ----------
    edges : tuple[Edge]
        Edges in construction order.
    vertices : frozenset
    labels : frozenset[int]
        The set of labels in use.
    lifetime : int
        Largest label, or 0 for an edgeless graph.
    """

    def __init__(self, edges: Iterable, vertices: Iterable[Vertex] = ()):
        built = []
        by_id: dict = {}
        seen_slot: dict = {}
        verts = set(vertices)
        for item in edges:
            e = item if isinstance(item, Edge) else Edge(*item)
            if not isinstance(e.t, int) or isinstance(e.t, bool) or e.t < 1:
                raise MalformedInput(
                    f"edge {e.eid!r}: label must be a positive integer, got {e.t!r}"
                )
            if e.u == e.v:
                raise MalformedInput(f"edge {e.eid!r}: loops are not allowed")
            if e.eid in by_id:
                raise MalformedInput(f"duplicate edge id {e.eid!r}")
            slot = (e.pair, e.t)
            if slot in seen_slot:
                raise MalformedInput(
                    f"edges {seen_slot[slot]!r} and {e.eid!r} are parallel and "
                    f"share label {e.t}; snapshots must be simple"
                )
            seen_slot[slot] = e.eid
            by_id[e.eid] = e
            built.append(e)
            verts.add(e.u)
            verts.add(e.v)
        self.edges: tuple = tuple(built)
        self.vertices: frozenset = frozenset(verts)
        self._by_id = by_id
        self.labels: frozenset = frozenset(e.t for e in built)
        self.lifetime: int = max(self.labels) if self.labels else 0
        inc: dict = {v: [] for v in verts}
        for e in built:
            inc[e.u].append(e)
            inc[e.v].append(e)
        self._incident = {
            v: tuple(sorted(es, key=lambda e: (e.t, token_key(e.eid))))
            for v, es in inc.items()
        }
        self._multi: dict = {}
        for e in built:
            self._multi.setdefault(e.pair, []).append(e)
        self._multi = {
            pair: tuple(sorted(es, key=lambda e: e.t)) for pair, es in self._multi.items()
        }

    # -- access -----------------------------------------------------------

    def edge(self, eid: EdgeId) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise UnknownEdge(eid) from None

    def incident(self, v: Vertex) -> tuple:
        try:
            return self._incident[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def snapshot(self, t: int) -> tuple:
        return tuple(e for e in self.edges if e.t == t)

    def multiedge(self, u: Vertex, v: Vertex) -> tuple:
        pair = link_key(u, v)
        try:
            return self._multi[pair]
        except KeyError:
            raise MissingMultiedge(pair) from None

    def multiedges(self) -> dict:
        """Map from canonical vertex pair to the tuple of parallel edges."""
        return dict(self._multi)

    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges, key=lambda e: token_key(e.eid)))

    def underlying(self) -> "MGraph":
        """Forget the timefunction, keeping multiplicities."""
        return MGraph(
            {pair: len(es) for pair, es in self._multi.items()}, vertices=self.vertices
        )

    # -- restricted views --------------------------------------------------

    def without_labels(self, labels: Iterable[int]) -> "FilteredGraph":
        return FilteredGraph(self, labels)

    def without_multiedges(self, pairs: Iterable[tuple]) -> "TemporalGraph":
        dropped = {link_key(*p) for p in pairs}
        for pair in dropped:
            if pair not in self._multi:
                raise MissingMultiedge(pair)
        keep = [e for e in self.edges if e.pair not in dropped]
        return TemporalGraph(keep, vertices=self.vertices)

    def __repr__(self):
        return (
            f"TemporalGraph(vertices={len(self.vertices)}, edges={len(self.edges)}, "
            f"lifetime={self.lifetime})"
        )


class FilteredGraph(TemporalGraph):
    """A temporal graph with every edge at certain labels removed.

    Keeps a handle on the unfiltered ``source`` and the ``removed_labels``
    so cut witnesses can explain themselves.
    """

    def __init__(self, source: TemporalGraph, removed_labels: Iterable[int]):
        removed = frozenset(removed_labels)
        super().__init__(
            (e for e in source.edges if e.t not in removed), vertices=source.vertices
        )
        self.source = source
        self.removed_labels = removed


@dataclass(frozen=True)
class TemporalWalk:
    """A time-respecting walk, stored as its vertex and edge sequences.

    ``vertices`` has one more entry than ``edges``; edge ``i`` joins
    ``vertices[i]`` and ``vertices[i+1]``.  Zero-length walks (a single
    vertex, no edges) are allowed.
    """

    vertices: tuple
    edges: tuple

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def first(self) -> Vertex:
        return self.vertices[0]

    @property
    def last(self) -> Vertex:
        return self.vertices[-1]

    @property
    def labels(self) -> tuple:
        return tuple(e.t for e in self.edges)

    @property
    def label_set(self) -> frozenset:
        return frozenset(e.t for e in self.edges)

    @property
    def edge_ids(self) -> tuple:
        return tuple(e.eid for e in self.edges)

    @property
    def multiedge_pairs(self) -> frozenset:
        return frozenset(e.pair for e in self.edges)

    @property
    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def sequence(self) -> tuple:
        """Interleaved ``(v0, edge_id, v1, edge_id, ..., vk)`` form."""
        out = [self.vertices[0]]
        for e, v in zip(self.edges, self.vertices[1:]):
            out.append(e.eid)
            out.append(v)
        return tuple(out)

    def pretty(self) -> str:
        """Compact ``(v0, t1, v1, ..., tk, vk)`` rendering using labels."""
        out = [str(self.vertices[0])]
        for e, v in zip(self.edges, self.vertices[1:]):
            out.append(str(e.t))
            out.append(str(v))
        return "(" + ", ".join(out) + ")"


def validate_walk(g: TemporalGraph, sequence: Sequence) -> TemporalWalk:
    """Check an interleaved ``(v0, edge_id, v1, ...)`` sequence against *g*.

    Returns the walk on success.  Raises :class:`UnknownVertex`,
    :class:`UnknownEdge`, :class:`NonIncident` (with the failing step
    index) or :class:`DecreasingLabel` (likewise) on the first violation.
    """
    seq = list(sequence)
    if len(seq) % 2 == 0 or not seq:
        raise MalformedInput(
            "walk sequence must alternate vertex, edge id, vertex, ... "
            "(odd length, at least one vertex)"
        )
    verts = seq[0::2]
    eids = seq[1::2]
    for v in verts:
        if v not in g.vertices:
            raise UnknownVertex(v)
    edges = []
    prev_t = None
    for i, eid in enumerate(eids):
        e = g.edge(eid)
        cur, nxt = verts[i], verts[i + 1]
        if not e.touches(cur) or e.other(cur) != nxt:
            raise NonIncident(i, cur, eid)
        if prev_t is not None and e.t < prev_t:
            raise DecreasingLabel(i, prev_t, e.t)
        prev_t = e.t
        edges.append(e)
    return TemporalWalk(tuple(verts), tuple(edges))


def walk_from_labels(g: TemporalGraph, sequence: Sequence) -> TemporalWalk:
    """Resolve an interleaved ``(v0, t1, v1, t2, ...)`` sequence to a walk.

    Because snapshots are simple, a (vertex pair, label) slot names at most
    one edge, so the compact label form used throughout the docs is
    unambiguous.
    """
    seq = list(sequence)
    if len(seq) % 2 == 0 or not seq:
        raise MalformedInput(
            "label walk must alternate vertex, label, vertex, ... "
            "(odd length, at least one vertex)"
        )
    verts = seq[0::2]
    labels = seq[1::2]
    resolved = [verts[0]]
    for i, t in enumerate(labels):
        cur, nxt = verts[i], verts[i + 1]
        hit = None
        for e in g.multiedge(cur, nxt):
            if e.t == t:
                hit = e
                break
        if hit is None:
            raise MalformedInput(f"no edge between {cur!r} and {nxt!r} with label {t}")
        resolved.append(hit.eid)
        resolved.append(nxt)
    return validate_walk(g, resolved)


# -- time-respecting reachability ------------------------------------------


def earliest_arrival(g: TemporalGraph, s: Vertex) -> dict:
    """Earliest label at which each vertex is reachable from *s* (0 for *s*
    itself; unreachable vertices are absent)."""
    if s not in g.vertices:
        raise UnknownVertex(s)
    ea = {s: 0}
    for t in sorted(g.labels):
        snap = g.snapshot(t)
        # Within one snapshot several hops at the same label may chain, so
        # iterate to a fixpoint (snapshots are tiny in practice).
        changed = True
        while changed:
            changed = False
            for e in snap:
                for a, b in ((e.u, e.v), (e.v, e.u)):
                    if ea.get(a, INF) <= t and ea.get(b, INF) > t:
                        ea[b] = t
                        changed = True
    return ea


def latest_departure(g: TemporalGraph, z: Vertex) -> dict:
    """Latest label at which each vertex can still start a walk to *z*
    (infinity for *z* itself; vertices that cannot reach *z* are absent)."""
    if z not in g.vertices:
        raise UnknownVertex(z)
    ld = {z: INF}
    for t in sorted(g.labels, reverse=True):
        snap = g.snapshot(t)
        changed = True
        while changed:
            changed = False
            for e in snap:
                for a, b in ((e.u, e.v), (e.v, e.u)):
                    if ld.get(b, -INF) >= t and ld.get(a, -INF) < t:
                        ld[a] = t
                        changed = True
    return ld


def reachable(g: TemporalGraph, s: Vertex, z: Vertex) -> Optional[TemporalWalk]:
    """A time-respecting *s,z*-path, or ``None`` when *z* is unreachable.

    The witness follows earliest-arrival parent pointers, so it is a path
    (each vertex is adopted once) with non-decreasing labels.
    """
    if s not in g.vertices:
        raise UnknownVertex(s)
    if z not in g.vertices:
        raise UnknownVertex(z)
    if s == z:
        return TemporalWalk((s,), ())
    ea = {s: 0}
    parent: dict = {}
    for t in sorted(g.labels):
        snap = g.snapshot(t)
        changed = True
        while changed:
            changed = False
            for e in snap:
                for a, b in ((e.u, e.v), (e.v, e.u)):
                    if ea.get(a, INF) <= t and ea.get(b, INF) > t:
                        ea[b] = t
                        parent[b] = e
                        changed = True
    if z not in ea:
        return None
    rv = [z]
    re = []
    cur = z
    while cur != s:
        e = parent[cur]
        re.append(e)
        cur = e.other(cur)
        rv.append(cur)
    return TemporalWalk(tuple(reversed(rv)), tuple(reversed(re)))


def enumerate_paths(
    g: TemporalGraph, s: Vertex, z: Vertex, limit: Optional[int] = None
) -> list:
    """All time-respecting *s,z*-paths, in lexicographic order of their
    edge-id sequences.

    Raises :class:`LimitExceeded` if more than ``limit`` paths exist.
    Note a path cannot pass through *z* and return, so every path is
    emitted exactly once, at the moment it reaches *z*.
    """
    if s not in g.vertices:
        raise UnknownVertex(s)
    if z not in g.vertices:
        raise UnknownVertex(z)
    if s == z:
        return [TemporalWalk((s,), ())]
    out: list = []
    vpath = [s]
    epath: list = []
    used = {s}

    def extend(cur: Vertex, floor: int):
        for e in sorted(g.incident(cur), key=lambda e: token_key(e.eid)):
            if e.t < floor:
                continue
            nxt = e.other(cur)
            if nxt in used:
                continue
            vpath.append(nxt)
            epath.append(e)
            if nxt == z:
                out.append(TemporalWalk(tuple(vpath), tuple(epath)))
                if limit is not None and len(out) > limit:
                    raise LimitExceeded(limit, "temporal paths")
            else:
                used.add(nxt)
                extend(nxt, e.t)
                used.discard(nxt)
            vpath.pop()
            epath.pop()

    extend(s, 0)
    return out


# -- untimed multigraphs -----------------------------------------------------


class MGraph:
    """Undirected multigraph stored as link multiplicities.

    A *link* is an unordered vertex pair; its multiplicity counts the
    parallel edges joining the pair.  This is exactly the information left
    of a temporal graph once the timefunction is forgotten.

    Parameters
    ----------
    links:
        Either a mapping ``{(u, v): multiplicity}`` or an iterable of
        ``(u, v)`` / ``(u, v, multiplicity)`` items (repeats accumulate).
    vertices:
        Extra isolated vertices.
    """

    def __init__(self, links=(), vertices: Iterable[Vertex] = ()):
        acc: dict = {}
        if isinstance(links, Mapping):
            items = [(u, v, m) for (u, v), m in links.items()]
        else:
            items = [it if len(it) == 3 else (*it, 1) for it in links]
        for u, v, m in items:
            if u == v:
                raise MalformedInput(f"loop link at {u!r}")
            if not isinstance(m, int) or m < 1:
                raise MalformedInput(f"multiplicity of {u!r}-{v!r} must be >= 1")
            acc[link_key(u, v)] = acc.get(link_key(u, v), 0) + m
        self.links: dict = acc
        verts = set(vertices)
        for u, v in acc:
            verts.add(u)
            verts.add(v)
        self.vertices: frozenset = frozenset(verts)
        nbrs: dict = {v: set() for v in verts}
        for u, v in acc:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._nbrs = {v: tuple(sorted(ns, key=token_key)) for v, ns in nbrs.items()}

    @classmethod
    def from_temporal(cls, g: TemporalGraph) -> "MGraph":
        return g.underlying()

    # -- access -----------------------------------------------------------

    def order(self) -> int:
        return len(self.vertices)

    def size(self) -> int:
        return sum(self.links.values())

    def multiplicity(self, u: Vertex, v: Vertex) -> int:
        return self.links.get(link_key(u, v), 0)

    def neighbors(self, v: Vertex) -> tuple:
        try:
            return self._nbrs[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def underlying_degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def degree(self, v: Vertex) -> int:
        return sum(self.multiplicity(v, w) for w in self.neighbors(v))

    def sorted_links(self) -> list:
        return sorted(self.links.items(), key=lambda kv: (token_key(kv[0][0]), token_key(kv[0][1])))

    def __eq__(self, other):
        return (
            isinstance(other, MGraph)
            and self.vertices == other.vertices
            and self.links == other.links
        )

    def __hash__(self):
        return hash((self.vertices, frozenset(self.links.items())))

    def __repr__(self):
        return f"MGraph(vertices={len(self.vertices)}, links={len(self.links)}, size={self.size()})"

    # -- edits -------------------------------------------------------------

    def drop_link(self, u: Vertex, v: Vertex) -> "MGraph":
        pair = link_key(u, v)
        if pair not in self.links:
            raise MissingMultiedge(pair)
        rest = {p: m for p, m in self.links.items() if p != pair}
        return MGraph(rest, vertices=self.vertices)

    def set_multiplicity(self, u: Vertex, v: Vertex, m: int) -> "MGraph":
        if m == 0:
            return self.drop_link(u, v)
        pair = link_key(u, v)
        new = dict(self.links)
        new[pair] = m
        return MGraph(new, vertices=self.vertices)

    def m_subdivide(self, u: Vertex, v: Vertex) -> "MGraph":
        """Subdivide the link *uv*: replace its r parallel edges by a fresh
        vertex joined to *u* and to *v* by r parallel edges each."""
        pair = link_key(u, v)
        if pair not in self.links:
            raise MissingMultiedge(pair)
        m = self.links[pair]
        fresh = f"{pair[0]}~{pair[1]}"
        while fresh in self.vertices:
            fresh += "'"
        new = {p: mm for p, mm in self.links.items() if p != pair}
        new[link_key(pair[0], fresh)] = m
        new[link_key(fresh, pair[1])] = m
        return MGraph(new, vertices=self.vertices | {fresh})

    # -- global structure ---------------------------------------------------

    def components(self) -> list:
        seen: set = set()
        comps = []
        for start in sorted(self.vertices, key=token_key):
            if start in seen:
                continue
            comp = {start}
            queue = [start]
            while queue:
                cur = queue.pop()
                for w in self.neighbors(cur):
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            comps.append(
                MGraph(
                    {p: m for p, m in self.links.items() if p[0] in comp},
                    vertices=comp,
                )
            )
        return comps

    def is_connected(self) -> bool:
        return len(self.vertices) <= 1 or len(self.components()) == 1

    def canonical_form(self) -> tuple:
        """Isomorphism-invariant canonical encoding (brute force over all
        vertex orderings — intended for graphs with at most ~8 vertices)."""
        if self.order() > 8:
            raise PatternTooLarge("canonical_form is brute force; at most 8 vertices")
        verts = sorted(self.vertices, key=token_key)
        best = None
        for perm in itertools.permutations(range(len(verts))):
            pos = {v: perm[i] for i, v in enumerate(verts)}
            enc = tuple(
                sorted(
                    (min(pos[u], pos[v]), max(pos[u], pos[v]), m)
                    for (u, v), m in self.links.items()
                )
            )
            if best is None or enc < best:
                best = enc
        return (len(verts), best if best is not None else ())


# -- topological minors that respect multiplicities --------------------------


@dataclass(frozen=True)
class MinorEmbedding:
    """How a pattern sits inside a host graph.

    ``vertex_map`` sends pattern vertices to host branch vertices;
    ``link_paths`` sends each pattern link (canonical pair) to the host
    vertex sequence realising it.  Paths are internally disjoint from each
    other and from all branch vertices, and every host link along the path
    for a pattern link of multiplicity m has multiplicity at least m.
    """

    vertex_map: dict
    link_paths: dict


_PATTERN_MAX_VERTICES = 6
_PATTERN_MAX_EDGES = 12


def find_m_topological_minor(host: MGraph, pattern: MGraph) -> Optional[MinorEmbedding]:
    """Search for *pattern* as a multiplicity-respecting topological minor
    of *host*; return an embedding or ``None``.

    Each pattern link of multiplicity m must map to a host path all of
    whose links have multiplicity >= m; distinct pattern links map to
    internally disjoint paths.  The pattern must be small (guard raises
    :class:`PatternTooLarge`): the search is exponential backtracking.
    """
    if pattern.order() > _PATTERN_MAX_VERTICES or pattern.size() > _PATTERN_MAX_EDGES:
        raise PatternTooLarge(
            f"pattern has {pattern.order()} vertices / {pattern.size()} edges; "
            f"the matcher accepts at most {_PATTERN_MAX_VERTICES} / {_PATTERN_MAX_EDGES}"
        )
    if pattern.order() > host.order():
        return None
    p_verts = sorted(
        pattern.vertices, key=lambda v: (-pattern.underlying_degree(v), token_key(v))
    )
    h_verts = sorted(host.vertices, key=token_key)
    # Links in decreasing multiplicity so the hardest constraints fail fast.
    p_links = sorted(
        pattern.links.items(),
        key=lambda kv: (-kv[1], token_key(kv[0][0]), token_key(kv[0][1])),
    )

    def paths_between(a: Vertex, b: Vertex, mult: int, banned: frozenset) -> Iterator[tuple]:
        """Simple host a,b-paths avoiding ``banned`` internally, using only
        links of multiplicity >= mult."""
        trail = [a]
        on_trail = {a}

        def go(cur: Vertex) -> Iterator[tuple]:
            for w in host.neighbors(cur):
                if host.multiplicity(cur, w) < mult:
                    continue
                if w == b:
                    yield tuple(trail) + (b,)
                    continue
                if w in on_trail or w in banned:
                    continue
                trail.append(w)
                on_trail.add(w)
                yield from go(w)
                trail.pop()
                on_trail.discard(w)

        return go(a)

    def embed_links(i: int, vmap: dict, internals: frozenset) -> Optional[dict]:
        if i == len(p_links):
            return {}
        (pa, pb), mult = p_links[i]
        a, b = vmap[pa], vmap[pb]
        branch_images = frozenset(vmap.values())
        banned = (branch_images - {a, b}) | internals
        for path in paths_between(a, b, mult, banned):
            inner = frozenset(path[1:-1])
            rest = embed_links(i + 1, vmap, internals | inner)
            if rest is not None:
                rest[link_key(pa, pb)] = path
                return rest
        return None

    def assign(i: int, vmap: dict, used: set) -> Optional[MinorEmbedding]:
        if i == len(p_verts):
            paths = embed_links(0, vmap, frozenset())
            if paths is None:
                return None
            return MinorEmbedding(dict(vmap), paths)
        pv = p_verts[i]
        need = pattern.underlying_degree(pv)
        for hv in h_verts:
            if hv in used or host.underlying_degree(hv) < need:
                continue
            vmap[pv] = hv
            used.add(hv)
            found = assign(i + 1, vmap, used)
            if found is not None:
                return found
            used.discard(hv)
            del vmap[pv]
        return None

    return assign(0, {}, set())


def has_m_topological_minor(host: MGraph, pattern: MGraph) -> bool:
    return find_m_topological_minor(host, pattern) is not None
