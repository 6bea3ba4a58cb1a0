"""The five forbidden shapes, and how a verdict comes with receipts.

A multigraph is *Mengerian* when, no matter how its edges are timestamped,
the packing number p equals the covering number c for every terminal pair.
Recognition is pure shape-checking: a graph is Mengerian exactly when none
of five small multigraphs (M1..M5) embeds into it as an m-topological
minor.  Each catalog entry stores a concrete bad timestamping of its shape,
so a rejection can always be turned into a runnable counterexample.
"""

from tgmenger.fixtures import demo_network
from tgmenger.mengerian import bad_labeling_for, catalog, recognize, verify_catalog
from tgmenger.oracles import brute_force_c, brute_force_p

print("the catalog:")
for entry in catalog():
    mults = sorted(entry.shape.links.items())
    print(f"   {entry.code}  {entry.name:24s} links {mults}")
print()

report = verify_catalog(deep=True)
print(f"self-check: {len(report.checks)} catalog invariants verified, e.g.")
for line in report.checks[:4]:
    print("   -", line)
print()

# Recognize the quickstart network's underlying multigraph.
fx = demo_network()
host = fx.graph.underlying()
verdict = recognize(host)
print("demo network's underlying multigraph mengerian?", verdict.mengerian)
w = verdict.witness
print(f"   culprit: {w.code}, embedded via {dict(w.embedding.vertex_map)}")
print()

# Push the shape's stored bad timestamping through the embedding: a live
# temporal graph on the host where packing < covering.
bad, s, z = bad_labeling_for(host, w)
p = brute_force_p(bad, s, z).value
c = brute_force_c(bad, s, z).value
print(f"lifted counterexample on the host edges: p = {p} < c = {c}  ({s} -> {z})")
