"""Snapshot and multiedge cut search, both engines."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_temporal_graph, terminals
from tgmenger import cuts
from tgmenger.core import TemporalGraph, reachable
from tgmenger.errors import BudgetExceeded
from tgmenger.oracles import brute_force_c, brute_force_multiedge_cut


class TestPredicatesAndCandidates:
    def test_is_snapshot_cut(self, demo):
        g, s, z = demo.graph, demo.s, demo.z
        assert cuts.is_snapshot_cut(g, s, z, {2, 3})
        assert not cuts.is_snapshot_cut(g, s, z, {2})
        assert not cuts.is_snapshot_cut(g, s, z, set())

    def test_is_multiedge_cut(self, demo):
        g, s, z = demo.graph, demo.s, demo.z
        assert cuts.is_multiedge_cut(g, s, z, {("s", "u"), ("s", "w")})
        assert cuts.is_multiedge_cut(g, s, z, {("u", "s"), ("w", "s")})  # unordered
        assert not cuts.is_multiedge_cut(g, s, z, {("s", "u")})

    def test_candidate_labels_only_useful_ones(self, demo):
        g, s, z = demo.graph, demo.s, demo.z
        cands = cuts.candidate_labels(g, s, z)
        assert set(cands) <= g.labels
        # removing all candidates at once must disconnect
        assert cuts.is_snapshot_cut(g, s, z, cands)

    def test_candidate_labels_drop_unusable_times(self):
        # the b-c edge fires before a can reach b, so label 1 is useless
        g = TemporalGraph([(0, "a", "b", 2), (1, "b", "c", 1), (2, "b", "c", 3)])
        assert cuts.candidate_labels(g, "a", "c") == (2, 3)

    def test_candidate_multiedges(self, demo):
        cands = cuts.candidate_multiedges(demo.graph, demo.s, demo.z)
        assert all(pair == tuple(sorted(pair)) for pair in cands)
        assert cuts.is_multiedge_cut(demo.graph, demo.s, demo.z, cands)


class TestSnapshotCut:
    def test_demo_witness(self, demo):
        res = cuts.snapshot_cut_at_most(demo.graph, demo.s, demo.z, 2)
        assert res.found and res.labels == frozenset({2, 3})
        assert cuts.is_snapshot_cut(demo.graph, demo.s, demo.z, res.labels)
        assert not cuts.snapshot_cut_at_most(demo.graph, demo.s, demo.z, 1).found

    def test_tight_gap_witness(self, tight_gap):
        res = cuts.min_snapshot_cut(tight_gap.graph, tight_gap.s, tight_gap.z)
        assert (res.value, res.labels) == (2, frozenset({1, 2}))

    def test_two_route_witness(self, two_route):
        res = cuts.min_snapshot_cut(two_route.graph, two_route.s, two_route.z)
        assert (res.value, res.labels) == (2, frozenset({1, 2}))

    def test_found_implies_minimum_size(self, demo):
        res = cuts.snapshot_cut_at_most(demo.graph, demo.s, demo.z, 4)
        assert res.found and len(res.labels) == 2  # smallest witness, not just <= h

    def test_unreachable_means_empty_cut(self):
        g = TemporalGraph([(0, "a", "b", 2), (1, "b", "c", 1)])
        res = cuts.snapshot_cut_at_most(g, "a", "c", 0)
        assert res.found and res.labels == frozenset()
        assert cuts.min_snapshot_cut(g, "a", "c").value == 0

    def test_accounting_fields(self, demo):
        res = cuts.snapshot_cut_at_most(demo.graph, demo.s, demo.z, 2)
        assert res.engine in ("enumeration", "hitting")
        assert 0 < res.subsets_checked <= res.subset_bound
        assert res.subset_bound == cuts._subset_bound(len(res.candidates), 2)

    def test_subset_bound_is_cumulative(self):
        # sum of C(5, i) for i <= 2
        assert cuts._subset_bound(5, 2) == 1 + 5 + 10
        assert cuts._subset_bound(3, 7) == 8
        assert cuts._subset_bound(0, 2) == 1


class TestMultiedgeCut:
    def test_demo(self, demo):
        res = cuts.min_multiedge_cut(demo.graph, demo.s, demo.z)
        assert res.value == 2
        assert res.multiedges == frozenset({("s", "u"), ("s", "w")})
        at = cuts.multiedge_cut_at_most(demo.graph, demo.s, demo.z, 2)
        assert at.found and at.multiedges == res.multiedges
        assert not cuts.multiedge_cut_at_most(demo.graph, demo.s, demo.z, 1).found

    def test_witness_cuts(self, two_route):
        res = cuts.min_multiedge_cut(two_route.graph, two_route.s, two_route.z)
        assert cuts.is_multiedge_cut(two_route.graph, two_route.s, two_route.z, res.multiedges)


class TestEngines:
    def test_hitting_set_engine_agrees(self, monkeypatch, demo, tight_gap, two_route):
        fixtures = [demo, tight_gap, two_route]
        defaults = [
            cuts.min_snapshot_cut(fx.graph, fx.s, fx.z) for fx in fixtures
        ]
        monkeypatch.setattr(cuts, "ENUMERATION_THRESHOLD", 0)
        for fx, base in zip(fixtures, defaults):
            forced = cuts.min_snapshot_cut(fx.graph, fx.s, fx.z)
            assert forced.engine == "hitting" != base.engine
            assert (forced.value, forced.labels) == (base.value, base.labels)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6))
    def test_engines_agree_on_randoms(self, seed):
        g = random_temporal_graph(random.Random(seed))
        pairs = terminals(g)[:6]
        for s, z in pairs:
            base = cuts.min_snapshot_cut(g, s, z)
            try:
                forced_threshold = cuts.ENUMERATION_THRESHOLD
                cuts.ENUMERATION_THRESHOLD = 0
                forced = cuts.min_snapshot_cut(g, s, z)
            finally:
                cuts.ENUMERATION_THRESHOLD = forced_threshold
            assert (forced.value, forced.labels) == (base.value, base.labels)

    def test_budget_exhaustion(self, monkeypatch, demo):
        monkeypatch.setattr(cuts, "ENUMERATION_THRESHOLD", 0)
        monkeypatch.setattr(cuts, "PATH_LIMIT", 0)
        with pytest.raises(BudgetExceeded):
            cuts.snapshot_cut_at_most(demo.graph, demo.s, demo.z, 2, budget=0)

    def test_threads_do_not_change_answers(self, demo, tight_gap):
        for fx in (demo, tight_gap):
            solo = cuts.min_snapshot_cut(fx.graph, fx.s, fx.z, threads=1)
            duo = cuts.min_snapshot_cut(fx.graph, fx.s, fx.z, threads=2)
            assert (solo.value, solo.labels) == (duo.value, duo.labels)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_min_cut_matches_oracle(seed):
    g = random_temporal_graph(random.Random(seed))
    rng = random.Random(seed + 1)
    pairs = terminals(g)
    for s, z in rng.sample(pairs, min(4, len(pairs))):
        res = cuts.min_snapshot_cut(g, s, z)
        assert res.value == brute_force_c(g, s, z).value
        if res.value:
            assert cuts.is_snapshot_cut(g, s, z, res.labels)
            assert len(res.labels) == res.value
        else:
            assert reachable(g, s, z) is None or s == z


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_min_multiedge_cut_matches_oracle(seed):
    g = random_temporal_graph(random.Random(seed))
    rng = random.Random(seed + 2)
    pairs = terminals(g)
    for s, z in rng.sample(pairs, min(3, len(pairs))):
        res = cuts.min_multiedge_cut(g, s, z)
        assert res.value == brute_force_multiedge_cut(g, s, z).value
        if res.value:
            assert cuts.is_multiedge_cut(g, s, z, res.multiedges)
