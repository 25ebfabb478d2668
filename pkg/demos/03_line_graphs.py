"""Line graphs of cubic graphs: the vertex stars give an n-color certificate.

Run: python3 demos/03_line_graphs.py
"""
from srclab import is_strongly_rainbow_connected, src_exact
from srclab.campaigns import builtin_cubic_graphs
from srclab.constructions import triangle_packing_coloring
from srclab.graph import emit_graph6
from srclab.structure import line_graph, star_packing

for g in builtin_cubic_graphs():
    lg = line_graph(g)
    packing = star_packing(g)
    c = triangle_packing_coloring(lg, packing)
    ok = bool(is_strongly_rainbow_connected(lg, c))
    print(f"{emit_graph6(g):>6}: n={g.n}, L(G) has {lg.n} vertices and {lg.m} edges, "
          f"{packing.t} star triangles, {c.color_count} colors, verified={ok}")

k4 = builtin_cubic_graphs()[0]
print("exact src(L(K4)) =", src_exact(line_graph(k4)).value)
