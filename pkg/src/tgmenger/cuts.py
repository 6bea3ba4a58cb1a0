"""Snapshot cuts and multiedge cuts by bounded exhaustive search.

A *snapshot cut* is a set of time labels whose removal (all edges at those
labels) leaves the target unreachable; a *multiedge cut* removes whole
parallel classes instead.  Both questions are decided exactly, which is
exponential in the cut size — the point of these routines is careful
pruning, deterministic witnesses, and honest work accounting, not speed.

Two engines produce provably identical answers:

* subset enumeration in (size, lex) order over the pruned candidate list,
  checking reachability after each removal;
* a minimum-hitting-set search over the label sets of *all* s,z-paths,
  explored in the same (size, lex) order.

A subset cuts the graph iff it hits every path, and minimal cuts only use
candidate labels, so both engines return the lexicographically least
minimum-size witness.  The enumeration engine is preferred while its
subset count stays small; the hitting engine takes over when paths are
enumerable; otherwise enumeration runs anyway if it fits in the caller's
budget, and :class:`BudgetExceeded` is raised if nothing fits.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    TemporalGraph,
    earliest_arrival,
    enumerate_paths,
    latest_departure,
    reachable,
    token_key,
)
from .errors import BudgetExceeded, LimitExceeded, MalformedInput, UnknownVertex

DEFAULT_BUDGET = 10_000_000
ENUMERATION_THRESHOLD = 50_000
PATH_LIMIT = 200_000


@dataclass(frozen=True)
class CutResult:
    """Outcome of a bounded snapshot-cut search."""

    found: bool
    labels: Optional[frozenset]
    size_bound: int
    candidates: tuple
    subsets_checked: int
    subset_bound: int
    engine: str


@dataclass(frozen=True)
class MinCutResult:
    value: int
    labels: frozenset
    candidates: tuple
    subsets_checked: int
    subset_bound: int
    engine: str


@dataclass(frozen=True)
class MultiedgeCutResult:
    found: bool
    multiedges: Optional[frozenset]
    size_bound: int
    candidates: tuple
    subsets_checked: int
    subset_bound: int
    engine: str


@dataclass(frozen=True)
class MinMultiedgeCutResult:
    value: int
    multiedges: frozenset
    candidates: tuple
    subsets_checked: int
    subset_bound: int
    engine: str


def _check_terminals(g: TemporalGraph, s, z):
    if s not in g.vertices:
        raise UnknownVertex(s)
    if z not in g.vertices:
        raise UnknownVertex(z)
    if s == z:
        raise MalformedInput("terminals must be distinct")


def candidate_labels(g: TemporalGraph, s, z) -> tuple:
    """Labels that can appear on some temporal s,z-walk, hence the only
    labels a minimal cut can use.

    An edge uv at time t lies on such a walk iff one endpoint is reachable
    from s by time t and the other can still reach z from time t on.
    """
    _check_terminals(g, s, z)
    ea = earliest_arrival(g, s)
    ld = latest_departure(g, z)
    useful = set()
    for e in g.edges:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if ea.get(a, math.inf) <= e.t and ld.get(b, -math.inf) >= e.t:
                useful.add(e.t)
                break
    return tuple(sorted(useful))


def is_snapshot_cut(g: TemporalGraph, s, z, labels) -> bool:
    """Does removing every edge at the given labels separate z from s?"""
    _check_terminals(g, s, z)
    return reachable(g.without_labels(labels), s, z) is None


def candidate_multiedges(g: TemporalGraph, s, z) -> tuple:
    """Multiedges (as canonical vertex pairs) that can appear on some
    temporal s,z-walk."""
    _check_terminals(g, s, z)
    ea = earliest_arrival(g, s)
    ld = latest_departure(g, z)
    useful = set()
    for e in g.edges:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            if ea.get(a, math.inf) <= e.t and ld.get(b, -math.inf) >= e.t:
                useful.add(e.pair)
                break
    return tuple(sorted(useful, key=lambda pr: (token_key(pr[0]), token_key(pr[1]))))


def is_multiedge_cut(g: TemporalGraph, s, z, pairs) -> bool:
    """Does removing the given multiedges separate z from s?"""
    _check_terminals(g, s, z)
    return reachable(g.without_multiedges(pairs), s, z) is None


def _subset_bound(n: int, h: int) -> int:
    return sum(math.comb(n, i) for i in range(min(n, h) + 1))


# -- the two engines ------------------------------------------------------------


def _enumerate_engine(candidates, sizes, is_cut, threads: int):
    """(size, lex)-ordered subset enumeration; returns (witness or None,
    subsets checked)."""
    checked = 0
    if threads <= 1:
        for size in sizes:
            for combo in itertools.combinations(candidates, size):
                checked += 1
                if is_cut(combo):
                    return frozenset(combo), checked
        return None, checked

    chunk = 256
    window = threads * 4

    def eat(combos):
        for combo in combos:
            if is_cut(combo):
                return combo
        return None

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for size in sizes:
            combos = itertools.combinations(candidates, size)
            pending: deque = deque()

            def refill():
                while len(pending) < window:
                    batch = list(itertools.islice(combos, chunk))
                    if not batch:
                        return
                    pending.append((batch, pool.submit(eat, batch)))

            refill()
            # Batches are drained strictly in submission order, so the
            # first hit in the earliest batch wins and the witness matches
            # a serial run.
            while pending:
                batch, fut = pending.popleft()
                hit = fut.result()
                if hit is not None:
                    checked += batch.index(hit) + 1
                    return frozenset(hit), checked
                checked += len(batch)
                refill()
    return None, checked


def _path_masks(paths, candidates) -> list:
    pos = {c: i for i, c in enumerate(candidates)}
    masks = set()
    for p in paths:
        m = 0
        for value in p:
            m |= 1 << pos[value]
        masks.add(m)
    # Keep only inclusion-minimal masks: a set hits every path iff it hits
    # every minimal one.
    return [m for m in masks if not any(o != m and o & m == o for o in masks)]


def _hitting_engine(candidates, sizes, masks):
    """Lexicographically least minimum hitting set among the given sizes;
    returns (witness or None, nodes visited)."""
    visited = 0

    def lower_bound(remaining) -> int:
        union = 0
        count = 0
        for m in remaining:
            if not m & union:
                count += 1
                union |= m
        return count

    def go(start: int, left: int, chosen: list, remaining: list):
        nonlocal visited
        if not remaining:
            return tuple(chosen)
        if left == 0 or lower_bound(remaining) > left:
            return None
        for i in range(start, len(candidates) - left + 1):
            visited += 1
            bit = 1 << i
            chosen.append(candidates[i])
            hit = go(i + 1, left - 1, chosen, [m for m in remaining if not m & bit])
            if hit is not None:
                return hit
            chosen.pop()
        return None

    for size in sizes:
        if size == 0:
            if not masks:
                return frozenset(), visited
            continue
        hit = go(0, size, [], list(masks))
        if hit is not None:
            return frozenset(hit), visited
    return None, visited


def _dual_engine_search(
    g, s, z, candidates, max_size, budget, threads, is_cut, path_sets
):
    """Shared engine selection for cut searches.

    Returns (witness or None, checked, subset_bound, engine).
    """
    sizes = range(0, min(max_size, len(candidates)) + 1)
    bound = _subset_bound(len(candidates), max_size)
    if bound <= ENUMERATION_THRESHOLD:
        witness, checked = _enumerate_engine(candidates, sizes, is_cut, threads)
        return witness, checked, bound, "enumeration"
    try:
        paths = enumerate_paths(g, s, z, limit=PATH_LIMIT)
    except LimitExceeded:
        paths = None
    if paths is not None:
        masks = _path_masks((path_sets(p) for p in paths), candidates)
        witness, checked = _hitting_engine(candidates, sizes, masks)
        return witness, checked, bound, "hitting"
    if bound <= budget:
        witness, checked = _enumerate_engine(candidates, sizes, is_cut, threads)
        return witness, checked, bound, "enumeration"
    raise BudgetExceeded(bound, budget, "cut subset enumeration")


# -- public operations -----------------------------------------------------------


def snapshot_cut_at_most(
    g: TemporalGraph,
    s,
    z,
    h: int,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> CutResult:
    """Is there a snapshot cut of size at most *h*?  Witness is the
    lexicographically least minimum-size one if so."""
    if h < 0:
        raise MalformedInput("cut size bound must be >= 0")
    _check_terminals(g, s, z)
    if reachable(g, s, z) is None:
        return CutResult(True, frozenset(), h, (), 0, 1, "enumeration")
    cand = candidate_labels(g, s, z)
    witness, checked, bound, engine = _dual_engine_search(
        g, s, z, cand, h, budget, threads,
        lambda combo: is_snapshot_cut(g, s, z, combo),
        lambda p: p.label_set,
    )
    return CutResult(witness is not None, witness, h, cand, checked, bound, engine)


def min_snapshot_cut(
    g: TemporalGraph, s, z, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> MinCutResult:
    """Exact minimum snapshot cut with the lexicographically least witness.

    Always terminates: the candidate label set itself is a cut.
    """
    _check_terminals(g, s, z)
    if reachable(g, s, z) is None:
        return MinCutResult(0, frozenset(), (), 0, 1, "enumeration")
    cand = candidate_labels(g, s, z)
    witness, checked, bound, engine = _dual_engine_search(
        g, s, z, cand, len(cand), budget, threads,
        lambda combo: is_snapshot_cut(g, s, z, combo),
        lambda p: p.label_set,
    )
    assert witness is not None, "the full candidate set must be a cut"
    return MinCutResult(len(witness), witness, cand, checked, bound, engine)


def multiedge_cut_at_most(
    g: TemporalGraph,
    s,
    z,
    h: int,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> MultiedgeCutResult:
    """Is there a multiedge cut of size at most *h*?"""
    if h < 0:
        raise MalformedInput("cut size bound must be >= 0")
    _check_terminals(g, s, z)
    if reachable(g, s, z) is None:
        return MultiedgeCutResult(True, frozenset(), h, (), 0, 1, "enumeration")
    cand = candidate_multiedges(g, s, z)
    witness, checked, bound, engine = _dual_engine_search(
        g, s, z, cand, h, budget, threads,
        lambda combo: is_multiedge_cut(g, s, z, combo),
        lambda p: p.multiedge_pairs,
    )
    return MultiedgeCutResult(
        witness is not None, witness, h, cand, checked, bound, engine
    )


def min_multiedge_cut(
    g: TemporalGraph, s, z, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> MinMultiedgeCutResult:
    """Exact minimum multiedge cut with deterministic witness."""
    _check_terminals(g, s, z)
    if reachable(g, s, z) is None:
        return MinMultiedgeCutResult(0, frozenset(), (), 0, 1, "enumeration")
    cand = candidate_multiedges(g, s, z)
    witness, checked, bound, engine = _dual_engine_search(
        g, s, z, cand, len(cand), budget, threads,
        lambda combo: is_multiedge_cut(g, s, z, combo),
        lambda p: p.multiedge_pairs,
    )
    assert witness is not None, "the full candidate set must be a cut"
    return MinMultiedgeCutResult(len(witness), witness, cand, checked, bound, engine)
