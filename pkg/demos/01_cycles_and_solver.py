"""Exact src and rc on small graphs, and what a certificate looks like.

Run: python3 demos/01_cycles_and_solver.py
"""
from srclab import from_edge_list, is_strongly_rainbow_connected, rc_exact, src_exact
from srclab.constructions import cycle_coloring
from srclab.graph import cycle_graph, diameter, petersen_graph
from srclab.errors import BudgetExceeded

# Cycles: the walk coloring 1,2,3,...,ceil(k/2) repeated is optimal for k >= 4.
for k in range(4, 10):
    c = cycle_coloring(k)
    res = src_exact(cycle_graph(k))
    print(f"C{k}: src = {res.value}, walk coloring uses {c.color_count} colors: {c.colors}")

# A triangle with a pendant edge: rc and src both 2, diameter 2.
g = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
s, r = src_exact(g), rc_exact(g)
print(f"\ntriangle + pendant: diam = {diameter(g)}, rc = {r.value}, src = {s.value}")
print("certificate in edge-id order:", s.certificate.to_text())
print("verifier:", bool(is_strongly_rainbow_connected(g, s.certificate)))

# A rainbow-connected coloring need not be strongly rainbow connected.
g = from_edge_list(4, [(1, 2), (0, 3), (1, 3), (2, 3)])
from srclab.coloring import EdgeColoring, is_rainbow_connected

c = EdgeColoring.of(g, [0, 1, 1, 2])
v = is_strongly_rainbow_connected(g, c)
print(f"\nrainbow connected: {bool(is_rainbow_connected(g, c))}, strongly: {bool(v)}, witness pair {v.witness}")

# The search is bounded: over budget, the best known coloring comes back.
try:
    src_exact(petersen_graph(), budget=2000)
except BudgetExceeded as exc:
    print(f"\nPetersen graph: over budget, best known coloring gives src <= {exc.upper_bound}")
