"""
Planar maps, duals, and the two surgeries
=========================================

"""

# a planar map is a rotation system: counterclockwise dart order at
# every vertex.  faces and genus follow from face tracing.
from cdclab.corpus import cube, k4
from cdclab.planar_map import dualize

m = k4()
print("K4:", m.vertex_count, "vertices,", m.edge_count, "edges,",
      m.face_count, "faces, genus", m.euler_genus())

# the dual swaps vertices and faces; dart ids survive unchanged
d = dualize(m)
print("dual of K4:", d.vertex_count, "vertices (self-dual)")
print("dual of the cube:", dualize(cube()).vertex_count,
      "vertices (the octahedron)")

# truncation slices every vertex into a small face; the result is
# always cubic
from cdclab.surgery import complete_augmentation, complete_truncation

t, corr = complete_truncation(m)
print("truncated K4:", t.vertex_count, "vertices,", t.edge_count,
      "edges,", t.face_count, "faces; degrees",
      sorted({t.degree(v) for v in range(t.vertex_count)}))

# augmentation stacks a new apex into every face; the result is
# always a triangulation
a, _ = complete_augmentation(cube())
print("augmented cube:", a.vertex_count, "vertices,",
      a.edge_count, "edges; face lengths",
      sorted({len(f) for f in a.faces}))

# the two surgeries commute with dualization: augmenting the dual
# gives the dual of the truncation
from cdclab.iso import verify_square

report = verify_square(cube())
print("augment-the-dual vs dualize-the-truncation on the cube:",
      "same map" if report.passed else "MISMATCH")
