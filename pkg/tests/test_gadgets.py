"""Hardness-reduction gadget generators, checked against the oracles."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tgmenger.core import walk_from_labels
from tgmenger.cuts import min_snapshot_cut
from tgmenger.errors import ImproperColoring, MalformedInput
from tgmenger.gadgets import clique_gadget, indep_set_gadget, vc_gadget
from tgmenger.oracles import (
    brute_force_multiedge_cut,
    brute_force_p,
    find_multicolored_clique,
    max_independent_set,
    min_vertex_cover,
)


def random_simple_graph(rng, max_vertices=5):
    n = rng.randint(1, max_vertices)
    vertices = list(range(n))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < 0.5
    ]
    return vertices, edges


class TestIndependentSet:
    def test_structure(self):
        inst = indep_set_gadget([0, 1, 2], [(0, 1), (1, 2)])
        snaps = inst.manifest["path_snapshots"]
        assert set(snaps) == {"0", "1", "2"}  # manifest keys are JSON-friendly
        # vertex 1 sits on both edges; its path uses both edge snapshots
        assert snaps["1"] == [
            inst.manifest["snapshot_of_edge"]["0,1"],
            inst.manifest["snapshot_of_edge"]["1,2"],
        ]
        # one path per source vertex, pairwise intersecting iff adjacent
        assert inst.manifest["alpha"] == 2
        assert set(snaps["0"]) & set(snaps["2"]) == set()
        assert set(snaps["0"]) & set(snaps["1"])

    def test_packing_equals_alpha(self):
        cases = [
            ([0], []),
            ([0, 1], [(0, 1)]),  # K2: both endpoints degree 1
            ([0, 1, 2], []),  # no edges at all
            ([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3), (3, 0)]),  # C4
            (list(range(5)), [(u, v) for u in range(5) for v in range(u + 1, 5)]),
        ]
        for vertices, edges in cases:
            inst = indep_set_gadget(vertices, edges)
            alpha = max_independent_set(vertices, edges).value
            assert inst.manifest["alpha"] == alpha
            assert brute_force_p(inst.graph, inst.s, inst.z).value == alpha

    def test_snapshots_are_simple_even_for_k2(self):
        # both paths of a K2 share the lone edge snapshot; the fresh closing
        # labels keep the parallel s-z multiedge legal
        inst = indep_set_gadget(["a", "b"], [("a", "b")])
        assert inst.graph.lifetime >= 2

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_sources(self, seed):
        vertices, edges = random_simple_graph(random.Random(seed))
        inst = indep_set_gadget(vertices, edges)
        alpha = max_independent_set(vertices, edges).value
        assert brute_force_p(inst.graph, inst.s, inst.z).value == alpha

    def test_rejects_junk(self):
        with pytest.raises(MalformedInput):
            indep_set_gadget([0], [(0, 1)])
        with pytest.raises(MalformedInput):
            indep_set_gadget([0, 0], [])
        with pytest.raises(MalformedInput):
            indep_set_gadget([0, 1], [(0, 0)])


class TestVertexCover:
    def test_cheat_route_is_blocked_by_stage_times(self):
        inst = vc_gadget(["u", "v"], [("u", "v")])
        # entering u's chain at time 1 and leaving via the shortcut lands on
        # v's tail at time 2, which still reaches z: the membrane works
        # because cutting EITHER endpoint's chain severs the shortcut edge.
        w = walk_from_labels(
            inst.graph, [inst.s, 1, "u.1", 1, "u+v", 2, "v.4", 2, inst.z]
        )
        assert w.is_path

    def test_cut_value_is_n_plus_tau(self):
        cases = [
            (["a"], []),
            (["a", "b"], [("a", "b")]),
            ([0, 1, 2], [(0, 1), (1, 2)]),
            ([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3), (3, 0)]),
            (list(range(5)), [(u, v) for u in range(5) for v in range(u + 1, 5)]),
        ]
        for vertices, edges in cases:
            inst = vc_gadget(vertices, edges)
            tau = min_vertex_cover(vertices, edges).value
            n = len(vertices)
            assert inst.manifest["tau"] == tau
            value = brute_force_multiedge_cut(inst.graph, inst.s, inst.z).value
            assert value == n + tau

    def test_thresholds_two_sided(self):
        vertices, edges = [0, 1, 2], [(0, 1), (1, 2), (0, 2)]
        inst = vc_gadget(vertices, edges)
        n, tau = 3, min_vertex_cover(vertices, edges).value
        value = brute_force_multiedge_cut(inst.graph, inst.s, inst.z).value
        assert value <= n + tau
        assert value > n + tau - 1

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_sources(self, seed):
        vertices, edges = random_simple_graph(random.Random(seed), max_vertices=4)
        inst = vc_gadget(vertices, edges)
        expected = len(vertices) + min_vertex_cover(vertices, edges).value
        assert brute_force_multiedge_cut(inst.graph, inst.s, inst.z).value == expected


def two_k4_instance():
    """Two vertex-disjoint K4s across classes a, b, c, d: a YES instance
    where every pair has exactly two candidate edges (m = 2)."""
    vertices = [f"{cls}{i}" for cls in "abcd" for i in (1, 2)]
    coloring = {v: v[0] for v in vertices}
    edges = []
    for i in (1, 2):
        group = [f"{cls}{i}" for cls in "abcd"]
        edges += list(itertools.combinations(group, 2))
    return vertices, edges, coloring


def crossed_no_instance():
    """Pair pattern AB/AC/BD/CD = (1,1)+(2,2) and AD/BC = (1,2)+(2,1):
    every pair has m = 2 edges but no transversal picks a clique."""
    vertices = [f"{cls}{i}" for cls in "abcd" for i in (1, 2)]
    coloring = {v: v[0] for v in vertices}
    straight = [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]
    crossed = [("a", "d"), ("b", "c")]
    edges = [(f"{x}{i}", f"{y}{i}") for x, y in straight for i in (1, 2)]
    edges += [(f"{x}1", f"{y}2") for x, y in crossed]
    edges += [(f"{x}2", f"{y}1") for x, y in crossed]
    return vertices, edges, coloring


class TestClique:
    def test_yes_instance_k4(self):
        vertices, edges, coloring = two_k4_instance()
        assert find_multicolored_clique(coloring, edges) is not None
        inst = clique_gadget(vertices, edges, coloring)
        h = inst.manifest["cut_threshold"]
        assert h == 6 + 4
        res = min_snapshot_cut(inst.graph, inst.s, inst.z)
        assert res.value <= h

    def test_no_instance_k4(self):
        vertices, edges, coloring = crossed_no_instance()
        assert find_multicolored_clique(coloring, edges) is None
        inst = clique_gadget(vertices, edges, coloring)
        h = inst.manifest["cut_threshold"]
        res = min_snapshot_cut(inst.graph, inst.s, inst.z)
        assert h < res.value <= 2 * 6  # the unconditional two-per-window cut

    def test_manifest_and_windows(self):
        vertices, edges, coloring = two_k4_instance()
        inst = clique_gadget(vertices, edges, coloring)
        man = inst.manifest
        assert man["k"] == 4 and man["edges_per_pair"] == 2
        assert len(man["pair_windows"]) == 6
        windows = [tuple(w) for w in man["pair_windows"].values()]
        flat = [t for w in windows for t in w]
        assert len(flat) == len(set(flat))  # windows are disjoint
        assert man["has_clique"] is True
        assert sorted(coloring[v] for v in man["clique"]) == list("abcd")
        # per-vertex snapshots sit above every window
        assert min(man["vertex_snapshots"].values()) > max(flat)

    def test_padding_fills_missing_pairs(self):
        # k = 3 but one class pair has no edges: padding keeps windows aligned
        vertices = ["a1", "b1", "c1"]
        coloring = {"a1": "a", "b1": "b", "c1": "c"}
        edges = [("a1", "b1"), ("b1", "c1")]  # no a-c edge
        inst = clique_gadget(vertices, edges, coloring)
        assert inst.manifest["padding"]
        assert len(inst.manifest["pair_windows"]) == 3

    def test_k3_side_effect_is_one_sided(self):
        # at k = 3 the winning-window cut already fits under the threshold,
        # so even clique-free sources decide YES; the claim string records
        # that faithfulness needs k >= 4 and two edges per pair
        vertices = ["a1", "b1", "c1"]
        coloring = {"a1": "a", "b1": "b", "c1": "c"}
        edges = [("a1", "b1"), ("b1", "c1")]
        assert find_multicolored_clique(coloring, edges) is None
        inst = clique_gadget(vertices, edges, coloring)
        res = min_snapshot_cut(inst.graph, inst.s, inst.z)
        assert res.value <= inst.manifest["cut_threshold"]
        assert "k >= 4" in inst.manifest["claim"]

    def test_k2_minimal(self):
        inst = clique_gadget(
            ["x", "y"], [("x", "y")], {"x": "left", "y": "right"}
        )
        assert inst.manifest["k"] == 2
        assert not inst.manifest["padding"]
        res = min_snapshot_cut(inst.graph, inst.s, inst.z)
        assert res.value <= inst.manifest["cut_threshold"]

    def test_rejections(self):
        with pytest.raises(ImproperColoring):
            clique_gadget(["x", "y"], [("x", "y")], {"x": "c", "y": "c"})
        with pytest.raises(MalformedInput):
            clique_gadget(["x", "y"], [("x", "y")], {"x": "a"})
        with pytest.raises(MalformedInput):
            clique_gadget(["x"], [], {"x": "a"})  # k < 2
        with pytest.raises(MalformedInput):
            clique_gadget(["x", "y"], [], {"x": "a", "y": "b"})  # no edges at all


class TestManifests:
    def test_round_trip_friendly(self):
        import json

        for inst in (
            indep_set_gadget([0, 1], [(0, 1)]),
            vc_gadget([0, 1], [(0, 1)]),
            clique_gadget(["x", "y"], [("x", "y")], {"x": "a", "y": "b"}),
        ):
            text = json.dumps(inst.manifest, default=str)
            assert json.loads(text)["reduction"] == inst.manifest["reduction"]
            assert inst.question
            assert inst.s in inst.graph.vertices
            assert inst.z in inst.graph.vertices
