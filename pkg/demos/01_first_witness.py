"""
Finding a noncritical vertex
============================

Delete a vertex from a strongly connected digraph and ask whether what is
left is still strongly connected.  If so the vertex is noncritical.  This
walk-through builds a small digraph, checks it by brute force, and then
asks the constructive finder for a certified witness.
"""

from noncritical import analyze, build_digraph, classify_hypothesis, constructive_noncritical, noncritical_oracle
from noncritical.report import format_report_text

# Three mutually linked vertices 0, 1, 2 plus a detour 3 -> 4.
# Every one of 0, 1, 2 sends an arc to 3 and receives one from 4.
arcs = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1), (3, 4)]
arcs += [(s, 3) for s in range(3)] + [(4, s) for s in range(3)]
D = build_digraph(5, arcs)

print("degrees:", D.degrees())
print("hypothesis:", classify_hypothesis(D).to_dict())

# brute force first: try every deletion
print("oracle:", sorted(noncritical_oracle(D)))

# the certified route grows a maximal proper strongly connected subgraph,
# hangs breadth-first trees off its two boundary vertices and picks a
# common leaf
cert = constructive_noncritical(D)
print("witness:", cert.vertex, cert.case_tag.value)
print("MPSS:", sorted(cert.mpss.S), "omega_in", cert.mpss.omega_in, "omega_out", cert.mpss.omega_out)
t_in, t_out = cert.trees
print("incoming leaves:", sorted(t_in.leaves), "outgoing leaves:", sorted(t_out.leaves))

print()
print(format_report_text(analyze(D)))
