"""Classic NP-hard problems and W[1]-hardness, compiled into temporal connectivity.

Three generators turn a static source instance into a temporal graph whose
connectivity answers the source question:

* independent set of size k        ->  k snapshot-disjoint paths
* vertex cover of size k           ->  multiedge cut of size n + k
* multicolored clique of size k    ->  snapshot cut of size C(k,2) + k

Each instance ships a manifest documenting the translation, so the claims
below are checked against brute force on the spot.
"""

from tgmenger.cuts import multiedge_cut_at_most, snapshot_cut_at_most
from tgmenger.disjoint_paths import max_snapshot_disjoint
from tgmenger.gadgets import clique_gadget, indep_set_gadget, vc_gadget
from tgmenger.oracles import max_independent_set, min_vertex_cover

# --- independent set on the 5-cycle ------------------------------------------

c5_vertices = list(range(5))
c5_edges = [(i, (i + 1) % 5) for i in range(5)]
alpha = max_independent_set(c5_vertices, c5_edges)
inst = indep_set_gadget(c5_vertices, c5_edges)
print(f"C5: alpha = {alpha.value}, witness {sorted(alpha.witness)}")
print(f"   gadget: {inst.graph}")
for k in (alpha.value, alpha.value + 1):
    found = max_snapshot_disjoint(inst.graph, inst.s, inst.z, k).found
    print(f"   {k} disjoint paths? {'yes' if found else 'no'}")
print()

# --- vertex cover on a star plus an edge --------------------------------------

vertices = ["hub", "a", "b", "c", "d"]
edges = [("hub", "a"), ("hub", "b"), ("hub", "c"), ("c", "d")]
tau = min_vertex_cover(vertices, edges)
inst = vc_gadget(vertices, edges)
n = len(vertices)
print(f"star+edge: tau = {tau.value}, cover {sorted(tau.witness)}")
print(f"   gadget: {inst.graph}")
for k in range(0, 3):
    found = multiedge_cut_at_most(inst.graph, inst.s, inst.z, n + k).found
    verdict = "yes" if found else "no"
    print(f"   multiedge cut of size {n}+{k}? {verdict}   (cover of size {k}: {tau.value <= k})")
print()

# --- multicolored clique, k = 2 ----------------------------------------------

vertices = ["r1", "r2", "g1"]
edges = [("r1", "g1")]
coloring = {"r1": "red", "r2": "red", "g1": "green"}
inst = clique_gadget(vertices, edges, coloring)
h = inst.manifest["cut_threshold"]
found = snapshot_cut_at_most(inst.graph, inst.s, inst.z, h).found
print(f"2-colored source with edge r1-g1: clique gadget {inst.graph}")
print(f"   snapshot cut of size {h}? {'yes' if found else 'no'}"
      f"   (a rainbow clique exists: r1+g1)")
print()
print("manifest keys shipped with the last instance:", sorted(inst.manifest))
