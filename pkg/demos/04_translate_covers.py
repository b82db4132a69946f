"""
Pulling covers back through a truncation
========================================

"""

# truncating every vertex of a graph produces a cubic graph whose
# covers can be translated back: corner edges collapse, inherited
# edges keep their identity, and tiny corner triangles drop out
from cdclab.cdc import (
    check_orientability,
    enumerate_covers,
    facial_cover,
    translate_cover,
)
from cdclab.corpus import k4
from cdclab.planar_map import underlying_graph
from cdclab.surgery import complete_truncation

host = k4()
out, corr = complete_truncation(host)
print("host K4 ->", out.vertex_count, "vertex truncation")

# the facial cover of the truncation translates to the facial cover
# of the host
report = translate_cover(facial_cover(out), corr)
same = report.cover.canonical_form() == facial_cover(host).canonical_form()
print("facial cover pulls back to the host's facial cover:", same)
print("corner triangles dropped:", len(report.dropped))

# every orientable cover of the truncation translates to an
# orientable cover of the host, and distinct covers stay distinct
g = underlying_graph(out)
gh = underlying_graph(host)
found = enumerate_covers(g, max_edges=18)
images = set()
for cover in found.covers:
    rep = translate_cover(cover, corr)
    assert check_orientability(gh, rep.cover) is not None
    images.add(rep.cover.canonical_form())
print(f"{len(found.covers)} truncation covers ->",
      f"{len(images)} distinct host covers, all orientable")
