"""
Apollonian networks: stacking, recognition, edge anatomy
========================================================

"""

# an Apollonian network grows from K4 by repeatedly stacking a new
# degree-3 vertex into a triangular face
from cdclab.apollonian import (
    check_edge_classification,
    generate_apollonian,
    is_apollonian,
    separating_triangles,
)
from cdclab.planar_map import underlying_graph

m = generate_apollonian(8, seed=42)
g = underlying_graph(m)
print("stacked 8 times:", g.n, "vertices,", len(g.edges), "edges")

# recognition peels degree-3 vertices back down to K4
print("recognized as Apollonian:", is_apollonian(g))

# every stack buries a face; its triangle becomes separating
tris = separating_triangles(g)
print("separating triangles:", len(tris.separating))

# one might hope every edge either touches a degree-3 vertex or lies
# in a separating triangle.  that dichotomy FAILS: two stacks into
# adjacent faces leave the shared-face edge with both endpoints of
# degree 4 and only facial triangles around it
report = check_edge_classification(g)
bad = [e for e in report.entries if not e.ok]
print("edge dichotomy holds here:", report.passed,
      f"({len(bad)} uncovered edges)" if bad else "")

small = generate_apollonian([0, 1], seed=None)
rep = check_edge_classification(underlying_graph(small))
worst = [e.edge for e in rep.entries if not e.ok]
print("two adjacent stacks on K4 already break it:", worst)
