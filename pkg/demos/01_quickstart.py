"""Build a small temporal network, pack disjoint paths, and cut them off.

Run with ``python3 demos/01_quickstart.py``.
"""

from tgmenger.core import TemporalGraph
from tgmenger.cuts import snapshot_cut_at_most
from tgmenger.disjoint_paths import max_snapshot_disjoint

# Each edge is (id, u, v, timestep).  Parallel edges are fine as long as
# they are active at different timesteps.
g = TemporalGraph(
    [
        ("sw1", "s", "w", 1),
        ("wv1", "w", "v", 1),
        ("su2", "s", "u", 2),
        ("wz2", "w", "z", 2),
        ("vz2", "v", "z", 2),
        ("sw3", "s", "w", 3),
        ("wu3", "w", "u", 3),
        ("vz3", "v", "z", 3),
        ("uz3", "u", "z", 3),
        ("uz4", "u", "z", 4),
    ]
)

print(g)
print()

# Two s-z paths that never ride the same snapshot?
res = max_snapshot_disjoint(g, "s", "z", 2)
print("two snapshot-disjoint s-z paths?", "yes" if res.found else "no")
for walk in res.family:
    print("  ", walk.pretty(), "   timesteps", sorted(walk.label_set))
print(
    "product search materialized",
    res.tuples_materialized,
    "of at most",
    res.tuple_bound,
    "tuples",
)
print()

# ...and the dual question: which two timesteps disconnect s from z?
cut = snapshot_cut_at_most(g, "s", "z", 2)
print("a 2-timestep cut?", "yes" if cut.found else "no")
print("   removing snapshots", sorted(cut.labels), "kills every temporal s-z path")
